#pragma once

#include "ndfourier/arithmetic.hpp"

namespace ndf {

// A = (A1, A2) = A1 (+) i'A2. Both parts share one context; a real element
// A1 is identified with (A1, 0').
class NDComplex {
 public:
  NDComplex(NDNumber re, NDNumber im);
  explicit NDComplex(NDNumber re);

  const NDNumber& re() const { return re_; }
  const NDNumber& im() const { return im_; }
  const ContextPtr& context() const { return re_.context(); }

  friend bool operator==(const NDComplex& a, const NDComplex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  NDNumber re_;
  NDNumber im_;
};

// i' = (0', 1').
NDComplex i_prime(const ContextPtr& ctx);

NDComplex cadd(const NDComplex& a, const NDComplex& b);
NDComplex csub(const NDComplex& a, const NDComplex& b);
NDComplex cmul(const NDComplex& a, const NDComplex& b);
NDComplex cneg(const NDComplex& a);
NDComplex conj(const NDComplex& a);

// |A|^{2'} = A1^{2'} (+) A2^{2'}.
NDNumber modulus_sq(const NDComplex& a);

// Largest absolute difference of lower coordinates over both parts.
Rational lower_distance(const NDComplex& a, const NDComplex& b);
bool approx_equal(const NDComplex& a, const NDComplex& b, const Rational& tolerance);

// Cos X = f^-1(cos f(X)) and friends. The lowercase value is rounded to the
// context's precision_bits; f^-1 then applies exactly.
NDNumber nd_cos(const NDNumber& x);
NDNumber nd_sin(const NDNumber& x);
NDNumber nd_exp(const NDNumber& x);

// Exp(i' phi) = (Cos phi, Sin phi).
NDComplex cexp_i(const NDNumber& phi);

enum class SeriesKind { Cos, Sin, Exp };

// Partial sum of the (+)-Taylor series with `terms` nonzero terms, built from
// pow_nat, factorial_prime and (-)1' exactly as written for X:
//   Exp: (+)_{k<terms} X^{k'} (/) k!'
//   Cos: (+)_{k<terms} ((-)1')^{k'} X^{(2k)'} (/) (2k)!'
//   Sin: (+)_{k<terms} ((-)1')^{k'} X^{(2k+1)'} (/) (2k+1)!'
NDNumber taylor_partial(SeriesKind kind, const NDNumber& x, unsigned terms);

}  // namespace ndf
