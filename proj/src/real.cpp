#include "ndfourier/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

namespace ndf {

Real::Real(long precision_bits) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(precision_bits));
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, long precision_bits) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(precision_bits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(double value, long precision_bits) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(precision_bits));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, long precision_bits) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(precision_bits));
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // Leave `other` as a valid minimal-precision zero.
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::rounded(long precision_bits) const {
  Real out(precision_bits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

Rational Real::to_rational() const {
  Rational out;
  mpfr_get_q(out.get_mpq_t(), value_);
  return out;
}

double Real::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string Real::to_decimal(int digits) const {
  if (mpfr_zero_p(value_)) return "0";
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rg", digits, value_);
  std::unique_ptr<char, decltype(&mpfr_free_str)> holder(raw, &mpfr_free_str);
  return std::string(raw);
}

namespace {

mpfr_prec_t wider(const Real& a, const Real& b) { return std::max(mpfr_get_prec(a.get()), mpfr_get_prec(b.get())); }

}  // namespace

Real& Real::operator+=(const Real& rhs) {
  mpfr_prec_round(value_, wider(*this, rhs), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  mpfr_prec_round(value_, wider(*this, rhs), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  mpfr_prec_round(value_, wider(*this, rhs), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  mpfr_prec_round(value_, wider(*this, rhs), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

Real Real::scaled(long e) const {
  Real out(*this);
  mpfr_mul_2si(out.value_, out.value_, e, MPFR_RNDN);
  return out;
}

#define NDF_UNARY(name, fn)                  \
  Real name(const Real& x) {                 \
    Real out(x.precision());                 \
    fn(out.get(), x.get(), MPFR_RNDN);       \
    return out;                              \
  }

NDF_UNARY(abs, mpfr_abs)
NDF_UNARY(sqrt, mpfr_sqrt)
NDF_UNARY(sin, mpfr_sin)
NDF_UNARY(cos, mpfr_cos)
NDF_UNARY(exp, mpfr_exp)
NDF_UNARY(log, mpfr_log)

#undef NDF_UNARY

Real floor(const Real& x) {
  Real out(x.precision());
  mpfr_floor(out.get(), x.get());
  return out;
}

Real pi(long precision_bits) {
  Real out(precision_bits);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

namespace {

// Working precision that keeps the rounding of the argument itself well below
// the requested output precision.
long guarded_precision(const Rational& x, long precision_bits) {
  long magnitude = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
                   static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
  return precision_bits + 64 + std::max(0L, magnitude);
}

template <typename Fn>
Rational apply_rounded(const Rational& x, long precision_bits, Fn fn) {
  Real arg(x, guarded_precision(x, precision_bits));
  return fn(arg).rounded(precision_bits).to_rational();
}

}  // namespace

Rational cos_rational(const Rational& x, long precision_bits) {
  return apply_rounded(x, precision_bits, [](const Real& r) { return cos(r); });
}

Rational sin_rational(const Rational& x, long precision_bits) {
  return apply_rounded(x, precision_bits, [](const Real& r) { return sin(r); });
}

Rational exp_rational(const Rational& x, long precision_bits) {
  return apply_rounded(x, precision_bits, [](const Real& r) { return exp(r); });
}

Rational log_rational(const Rational& x, long precision_bits) {
  return apply_rounded(x, precision_bits, [](const Real& r) { return log(r); });
}

Rational sqrt_rational(const Rational& x, long precision_bits) {
  return apply_rounded(x, precision_bits, [](const Real& r) { return sqrt(r); });
}

}  // namespace ndf
