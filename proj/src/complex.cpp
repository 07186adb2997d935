#include "ndfourier/complex.hpp"

#include <utility>

#include "ndfourier/errors.hpp"
#include "ndfourier/real.hpp"

namespace ndf {

NDComplex::NDComplex(NDNumber re, NDNumber im) : re_(std::move(re)), im_(std::move(im)) {
  require_same_context(re_, im_);
}

NDComplex::NDComplex(NDNumber re) : re_(re), im_(zero_prime(re.context())) {}

NDComplex i_prime(const ContextPtr& ctx) { return NDComplex(zero_prime(ctx), one_prime(ctx)); }

NDComplex cadd(const NDComplex& a, const NDComplex& b) { return NDComplex(add(a.re(), b.re()), add(a.im(), b.im())); }

NDComplex csub(const NDComplex& a, const NDComplex& b) { return NDComplex(sub(a.re(), b.re()), sub(a.im(), b.im())); }

NDComplex cmul(const NDComplex& a, const NDComplex& b) {
  return NDComplex(sub(mul(a.re(), b.re()), mul(a.im(), b.im())), add(mul(a.re(), b.im()), mul(a.im(), b.re())));
}

NDComplex cneg(const NDComplex& a) { return NDComplex(neg(a.re()), neg(a.im())); }

NDComplex conj(const NDComplex& a) { return NDComplex(a.re(), neg(a.im())); }

NDNumber modulus_sq(const NDComplex& a) { return add(pow_nat(a.re(), 2), pow_nat(a.im(), 2)); }

Rational lower_distance(const NDComplex& a, const NDComplex& b) {
  require_same_context(a.re(), b.re());
  Rational dre = abs(a.re().lower() - b.re().lower());
  Rational dim = abs(a.im().lower() - b.im().lower());
  return dre > dim ? dre : dim;
}

bool approx_equal(const NDComplex& a, const NDComplex& b, const Rational& tolerance) {
  return lower_distance(a, b) <= tolerance;
}

NDNumber nd_cos(const NDNumber& x) {
  return NDNumber(x.context(), cos_rational(x.lower(), x.ctx().precision_bits()));
}

NDNumber nd_sin(const NDNumber& x) {
  return NDNumber(x.context(), sin_rational(x.lower(), x.ctx().precision_bits()));
}

NDNumber nd_exp(const NDNumber& x) {
  return NDNumber(x.context(), exp_rational(x.lower(), x.ctx().precision_bits()));
}

NDComplex cexp_i(const NDNumber& phi) { return NDComplex(nd_cos(phi), nd_sin(phi)); }

NDNumber taylor_partial(SeriesKind kind, const NDNumber& x, unsigned terms) {
  if (terms < 1) throw DomainError("taylor_partial needs at least one term");
  const ContextPtr& ctx = x.context();
  const NDNumber minus_one = neg(one_prime(ctx));
  NDNumber sum = zero_prime(ctx);
  for (unsigned k = 0; k < terms; ++k) {
    unsigned long power = 0;
    NDNumber sign = one_prime(ctx);
    switch (kind) {
      case SeriesKind::Exp:
        power = k;
        break;
      case SeriesKind::Cos:
        power = 2UL * k;
        sign = pow_nat(minus_one, k);
        break;
      case SeriesKind::Sin:
        power = 2UL * k + 1;
        sign = pow_nat(minus_one, k);
        break;
    }
    NDNumber term = div(mul(sign, pow_nat(x, power)), factorial_prime(ctx, power));
    sum = add(sum, term);
  }
  return sum;
}

}  // namespace ndf
