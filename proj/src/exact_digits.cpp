#include "ndfourier/exact_digits.hpp"

#include <algorithm>
#include <stdexcept>

#include "ndfourier/errors.hpp"

namespace ndf {

std::string to_string(Branch b) { return b == Branch::Minus ? "minus" : "plus"; }

namespace {

char digit_char(int d) { return static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10)); }

int char_digit(char c) { return (c >= '0' && c <= '9') ? c - '0' : c - 'a' + 10; }

Integer digits_value(const std::vector<int>& digits, int base) {
  Integer v = 0;
  for (int d : digits) v = v * base + d;
  return v;
}

Integer ipow(int base, std::size_t e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return out;
}

void check_base(int base) {
  if (base < 2 || base > 36) throw DomainError("digit base must lie in [2, 36], got " + std::to_string(base));
}

bool only_zero_and_two(const RepeatingDigits& d) {
  auto ok = [](const std::vector<int>& v) { return std::all_of(v.begin(), v.end(), [](int x) { return x == 0 || x == 2; }); };
  return ok(d.integer_part) && ok(d.prefix) && ok(d.tail);
}

std::vector<int> scaled(const std::vector<int>& v, int factor, int divisor) {
  std::vector<int> out;
  out.reserve(v.size());
  for (int x : v) out.push_back(x * factor / divisor);
  return out;
}

// Digit doubling without domain checks; y >= 0, any target base >= 3.
Rational double_any(const Rational& y, int target_base, Branch branch) {
  RepeatingDigits bin = to_digits(y, 2);
  if (branch == Branch::Minus) bin = repeating_form(bin);
  RepeatingDigits out;
  out.base = target_base;
  out.integer_part = scaled(bin.integer_part, 2, 1);
  out.prefix = scaled(bin.prefix, 2, 1);
  out.tail = scaled(bin.tail, 2, 1);
  return from_digits(out);
}

// halve_digits plus membership in the image of the selected branch.
Rational halve_on_branch(const Rational& x, int base, Branch branch) {
  Rational y = halve_digits(x, base);
  if (double_any(y, base, branch) != x) {
    throw NotInCantorSet(to_string(x) + " lies in the " + to_string(branch == Branch::Minus ? Branch::Plus : Branch::Minus) +
                         " Cantor set, not the " + to_string(branch) + " one");
  }
  return y;
}

}  // namespace

bool RepeatingDigits::is_zero() const {
  auto zero = [](const std::vector<int>& v) { return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; }); };
  return zero(integer_part) && zero(prefix) && zero(tail);
}

std::string RepeatingDigits::to_string() const {
  std::string out = negative ? "- " : "+ ";
  if (integer_part.empty()) {
    out += '0';
  } else {
    for (int d : integer_part) out += digit_char(d);
  }
  if (!prefix.empty() || !tail.empty()) {
    out += '.';
    for (int d : prefix) out += digit_char(d);
    if (!tail.empty()) {
      out += '(';
      for (int d : tail) out += digit_char(d);
      out += ')';
    }
  }
  out += '_' + std::to_string(base);
  return out;
}

RepeatingDigits to_digits(const Rational& q, int base, std::size_t max_period) {
  check_base(base);
  RepeatingDigits out;
  out.base = base;
  out.negative = sgn(q) < 0;

  Rational a = q;
  if (out.negative) a = -a;
  Integer int_part = floor_of(a);
  if (int_part != 0) {
    for (char c : int_part.get_str(base)) out.integer_part.push_back(char_digit(c));
  }

  const Integer& den = a.get_den();
  Integer rem = a.get_num() - int_part * den;
  if (rem == 0) return out;

  // den = (base-smooth part) * (part coprime to base). The smooth part fixes
  // the pre-period length, the coprime part the period.
  Integer coprime = den;
  Integer g;
  const Integer b = base;
  for (;;) {
    mpz_gcd(g.get_mpz_t(), coprime.get_mpz_t(), b.get_mpz_t());
    if (g == 1) break;
    coprime /= g;
  }
  Integer smooth = den / coprime;
  std::size_t preperiod = 0;
  while (smooth != 1) {
    mpz_gcd(g.get_mpz_t(), smooth.get_mpz_t(), b.get_mpz_t());
    smooth /= g;
    ++preperiod;
  }

  std::size_t period = 0;
  if (coprime != 1) {
    Integer x = b % coprime;
    period = 1;
    while (x != 1) {
      x = (x * b) % coprime;
      if (++period > max_period) {
        throw std::length_error("base-" + std::to_string(base) + " period of " + to_string(q) + " exceeds " +
                                std::to_string(max_period) + " digits");
      }
    }
  }

  out.prefix.reserve(preperiod);
  out.tail.reserve(period);
  Integer digit;
  for (std::size_t i = 0; i < preperiod + period; ++i) {
    rem *= base;
    mpz_fdiv_qr(digit.get_mpz_t(), rem.get_mpz_t(), rem.get_mpz_t(), den.get_mpz_t());
    (i < preperiod ? out.prefix : out.tail).push_back(static_cast<int>(digit.get_si()));
  }
  return out;
}

Rational from_digits(const RepeatingDigits& d) {
  check_base(d.base);
  Rational value(digits_value(d.integer_part, d.base));
  Integer scale = ipow(d.base, d.prefix.size());
  value += make_rational(digits_value(d.prefix, d.base), scale);
  if (!d.tail.empty()) {
    Integer cycle = ipow(d.base, d.tail.size()) - 1;
    value += make_rational(digits_value(d.tail, d.base), scale * cycle);
  }
  return d.negative ? Rational(-value) : value;
}

RepeatingDigits repeating_form(const RepeatingDigits& d) {
  if (!d.terminating() || d.is_zero()) return d;
  RepeatingDigits out = d;
  const int top = d.base - 1;
  auto last_nonzero = [](const std::vector<int>& v) {
    auto it = std::find_if(v.rbegin(), v.rend(), [](int x) { return x != 0; });
    return it == v.rend() ? -1 : static_cast<int>(v.rend() - it) - 1;
  };
  if (int i = last_nonzero(out.prefix); i >= 0) {
    out.prefix.resize(static_cast<std::size_t>(i) + 1);
    out.prefix.back() -= 1;
  } else {
    int j = last_nonzero(out.integer_part);
    out.integer_part[static_cast<std::size_t>(j)] -= 1;
    for (std::size_t k = static_cast<std::size_t>(j) + 1; k < out.integer_part.size(); ++k) out.integer_part[k] = top;
    out.prefix.clear();
    auto first = std::find_if(out.integer_part.begin(), out.integer_part.end(), [](int x) { return x != 0; });
    out.integer_part.erase(out.integer_part.begin(), first);
  }
  out.tail = {top};
  return out;
}

Rational double_digits(const Rational& y, int target_base, Branch branch) {
  if (target_base != 3 && target_base != 4) throw DomainError("digit doubling targets base 3 or 4");
  if (sgn(y) < 0) throw DomainError("digit doubling needs y >= 0, got " + to_string(y));
  if (target_base == 3 && y >= 1) throw DomainError("ternary digit doubling needs y in [0, 1), got " + to_string(y));
  return double_any(y, target_base, branch);
}

Rational halve_digits(const Rational& x, int source_base) {
  if (sgn(x) < 0) throw DomainError("digit halving needs x >= 0, got " + to_string(x));
  RepeatingDigits d = to_digits(x, source_base);
  for (const RepeatingDigits& form : {d, repeating_form(d)}) {
    if (!only_zero_and_two(form)) continue;
    RepeatingDigits bin;
    bin.base = 2;
    bin.integer_part = scaled(form.integer_part, 1, 2);
    bin.prefix = scaled(form.prefix, 1, 2);
    bin.tail = scaled(form.tail, 1, 2);
    return from_digits(bin);
  }
  throw NotInCantorSet(to_string(x) + " has a digit other than 0 or 2 in base " + std::to_string(source_base));
}

Rational ternary_line_forward(const Rational& upper, Branch branch) {
  Rational cell(floor_of(upper));
  return halve_on_branch(upper - cell, 3, branch) + cell;
}

Rational ternary_line_inverse(const Rational& lower, Branch branch) {
  Rational cell(floor_of(lower));
  return double_any(lower - cell, 3, branch) + cell;
}

Rational scaled_line_forward(const Rational& upper, int base, Branch branch) {
  if (base < 3 || base > 36) throw DomainError("scaled Cantor line needs a base in [3, 36]");
  if (sgn(upper) < 0) return -halve_on_branch(-upper, base, branch);
  return halve_on_branch(upper, base, branch);
}

Rational scaled_line_inverse(const Rational& lower, int base, Branch branch) {
  if (base < 3 || base > 36) throw DomainError("scaled Cantor line needs a base in [3, 36]");
  if (sgn(lower) < 0) return -double_any(-lower, base, branch);
  return double_any(lower, base, branch);
}

Rational quaternary_forward(const Rational& upper, Branch branch) { return scaled_line_forward(upper, 4, branch); }

Rational quaternary_inverse(const Rational& lower, Branch branch) { return scaled_line_inverse(lower, 4, branch); }

}  // namespace ndf
