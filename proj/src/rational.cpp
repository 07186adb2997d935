#include "ndfourier/rational.hpp"

#include <algorithm>
#include <cctype>

#include "ndfourier/errors.hpp"
#include "ndfourier/real.hpp"

namespace ndf {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw ParseError("not a rational number: '" + std::string(whole) + "'");
  Integer out(std::string(body), 10);
  return (!s.empty() && s.front() == '-') ? Integer(-out) : out;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text, bool allow_decimal) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw ParseError("bad denominator in '" + std::string(text) + "'");
    Integer den(std::string(den_text), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    if (!allow_decimal) {
      throw ParseError("decimal input '" + std::string(text) + "' needs --decimal-input; write p/q for exact values");
    }
    bool negative = text.front() == '-';
    std::string_view int_part = text.substr(0, dot);
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    std::string_view frac_part = text.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty())) {
      throw ParseError("not a decimal number: '" + std::string(text) + "'");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    Integer num(digits.empty() ? std::string("0") : digits, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    if (negative) num = -num;
    return make_rational(num, den);
  }

  return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int digits) {
  // Enough binary precision that rounding to `digits` decimals is faithful.
  long bits = static_cast<long>(digits * 3.33) + 16;
  return Real(q, bits).to_decimal(digits);
}

Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Rational pow2(long e) {
  Integer p = 1;
  if (e >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return Rational(p);
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  return make_rational(1, p);
}

bool is_dyadic(const Rational& q) {
  const Integer& d = q.get_den();
  // Powers of two have a single set bit.
  return mpz_popcount(d.get_mpz_t()) == 1;
}

}  // namespace ndf
