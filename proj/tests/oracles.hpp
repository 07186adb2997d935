#pragma once

// Reference computations that share no code with the library: digit
// expansions by schoolbook long division, closed-form Fourier coefficients in
// long double, and a plain double-precision partial Fourier sum.

#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

struct Expansion {
  std::vector<int> prefix;
  std::vector<int> tail;
};

// Fractional digits of q in [0, 1) by long division; the tail starts where a
// remainder first repeats.
inline Expansion long_division(const mpq_class& q, int base) {
  mpz_class num = q.get_num(), den = q.get_den();
  std::map<mpz_class, std::size_t> seen;
  std::vector<int> digits;
  while (num != 0) {
    auto it = seen.find(num);
    if (it != seen.end()) {
      Expansion e;
      e.prefix.assign(digits.begin(), digits.begin() + static_cast<long>(it->second));
      e.tail.assign(digits.begin() + static_cast<long>(it->second), digits.end());
      return e;
    }
    seen.emplace(num, digits.size());
    num *= base;
    mpz_class d = num / den;
    digits.push_back(static_cast<int>(d.get_si()));
    num -= d * den;
  }
  return {digits, {}};
}

// Value of 0.prefix(tail) in `base`.
inline mpq_class value(const Expansion& e, int base) {
  mpq_class out = 0, scale = 1;
  for (int d : e.prefix) {
    scale /= base;
    out += scale * d;
  }
  if (!e.tail.empty()) {
    mpq_class t = 0, s = 1;
    for (int d : e.tail) {
      s /= base;
      t += s * d;
    }
    out += scale * t / (1 - s);
  }
  out.canonicalize();
  return out;
}

// Digit doubling of y in [0, 1): binary digits b_j -> digits 2 b_j in `base`.
// `ones_form` rewrites a terminating expansion as ...0111... first.
inline mpq_class double_fraction(const mpq_class& y, int base, bool ones_form) {
  Expansion e = long_division(y, 2);
  if (ones_form && e.tail.empty() && !e.prefix.empty()) {
    e.prefix.back() = 0;
    e.tail = {1};
  }
  for (int& d : e.prefix) d *= 2;
  for (int& d : e.tail) d *= 2;
  return value(e, base);
}

// n' for the quaternary set: binary digits of n reread in base 4, doubled.
inline mpz_class quaternary_n_prime(unsigned long n) {
  mpz_class out = 0, place = 1;
  for (; n; n >>= 1, place *= 4) out += place * (2 * (n & 1));
  return out;
}

// Same in base 3.
inline mpz_class middle_third_n_prime(unsigned long n) {
  mpz_class out = 0, place = 1;
  for (; n; n >>= 1, place *= 3) out += place * (2 * (n & 1));
  return out;
}

constexpr long double kPi = 3.141592653589793238462643383279502884L;

// <S_n|A> for the unit-period sawtooth a(x) = x on [-1/2, 1/2).
inline long double sawtooth_sine_coefficient(unsigned n) {
  const long double sign = (n % 2 == 1) ? 1.0L : -1.0L;
  return std::sqrt(2.0L) * sign / (2.0L * n * kPi);
}

// Partial sum with harmonics 1..terms.
inline double sawtooth_partial_sum(double x, unsigned terms) {
  double s = 0;
  for (unsigned n = 1; n <= terms; ++n) {
    s += static_cast<double>(sawtooth_sine_coefficient(n)) * std::sqrt(2.0) * std::sin(2.0 * static_cast<double>(kPi) * n * x);
  }
  return s;
}

}  // namespace oracle
