#pragma once

#include <mpfr.h>

#include <string>

#include "ndfourier/rational.hpp"

namespace ndf {

// Owning wrapper around an mpfr_t. Every value carries its own precision;
// binary operations produce a result at the larger of the two precisions
// and round to nearest.
class Real {
 public:
  explicit Real(long precision_bits = 128);
  Real(long value, long precision_bits);
  Real(int value, long precision_bits) : Real(static_cast<long>(value), precision_bits) {}
  Real(double value, long precision_bits);
  Real(const Rational& value, long precision_bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }

  // Same value rounded to a new precision.
  Real rounded(long precision_bits) const;

  // Exact value of the binary float (always a dyadic rational).
  Rational to_rational() const;
  double to_double() const;
  std::string to_decimal(int digits = 20) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  Real operator-() const;

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }
  friend bool operator>=(const Real& a, const Real& b) { return !(a < b); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

  // Multiplication by 2^e, exact.
  Real scaled(long e) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real floor(const Real& x);
Real pi(long precision_bits);

// The helpers below evaluate at the exact rational argument: the input is
// represented with `guard` extra bits before the call and the result is
// rounded to `precision_bits` significant bits.
Rational cos_rational(const Rational& x, long precision_bits);
Rational sin_rational(const Rational& x, long precision_bits);
Rational exp_rational(const Rational& x, long precision_bits);
Rational log_rational(const Rational& x, long precision_bits);
Rational sqrt_rational(const Rational& x, long precision_bits);

}  // namespace ndf
