#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ndfourier/arithmetic.hpp"
#include "ndfourier/complex.hpp"
#include "ndfourier/quadrature.hpp"
#include "ndfourier/real.hpp"

namespace ndf {

// Lowercase function a: R -> R evaluated at the precision of its argument.
using LowerFn = std::function<Real(const Real&)>;

// Discontinuities of the lowercase function inside [lo, hi].
using BreakpointFn = std::function<std::vector<Rational>(const Rational& lo, const Rational& hi)>;

// A: X -> X (or into the complex pairs) represented by its lowercase
// conjugate, A = f^-1 o a o f with a = re + i im.
//
// Functions built by the library carry a closed-form derivative, produced
// lazily so that infinite chains (sin -> cos -> -sin ...) cost nothing until
// used. Arbitrary callables fall back to finite differences.
class NDFunction {
 public:
  NDFunction(ContextPtr ctx, LowerFn re, std::string description);
  NDFunction(ContextPtr ctx, LowerFn re, LowerFn im, std::string description);

  NDFunction& with_breakpoints(BreakpointFn fn);
  NDFunction& with_derivative(std::function<NDFunction()> factory);

  const ContextPtr& context() const { return ctx_; }
  const std::string& description() const { return description_; }
  bool is_complex() const { return static_cast<bool>(im_); }
  bool has_closed_form_derivative() const { return static_cast<bool>(derivative_); }
  NDFunction closed_form_derivative() const;

  Real lower_re(const Real& x) const { return re_(x); }
  Real lower_im(const Real& x) const { return im_ ? im_(x) : Real(x.precision()); }
  const LowerFn& re_fn() const { return re_; }

  std::vector<Rational> breakpoints(const Rational& lo, const Rational& hi) const;

  // A(X), real part; the lowercase value is rounded to the context precision.
  NDNumber operator()(const NDNumber& x) const;
  NDComplex eval_complex(const NDNumber& x) const;

 private:
  ContextPtr ctx_;
  LowerFn re_;
  LowerFn im_;
  std::string description_;
  BreakpointFn breakpoints_;
  std::function<NDFunction()> derivative_;
};

// Lowercase constants that have to be produced at whatever precision the
// caller works at (sqrt(2/T), 2 n pi / T, ...).
using RealConst = std::function<Real(long bits)>;

RealConst rational_const(const Rational& value);

// Building blocks with registered derivatives. K is an NDNumber frequency;
// the lowercase frequency is f(K).
NDFunction nd_constant_fn(const ContextPtr& ctx, const Rational& value);
NDFunction nd_power_fn(const ContextPtr& ctx, unsigned n, const Rational& amplitude = 1);
// amplitude * cos(frequency x + quarter_turns * pi / 2)
NDFunction nd_sinusoid_fn(const ContextPtr& ctx, RealConst amplitude, RealConst frequency, int quarter_turns,
                          std::string description);
NDFunction nd_sin_fn(const NDNumber& k);
NDFunction nd_cos_fn(const NDNumber& k);
NDFunction nd_exp_fn(const NDNumber& k);
// Exp(i' K (.) X) = (Cos(K X), Sin(K X)).
NDFunction nd_exp_i_fn(const NDNumber& k);

// Pointwise (A (+) B)(X) and (Lambda (.) B)(X). Closed-form derivatives
// carry over when the operands have them.
NDFunction nd_sum_fn(const NDFunction& a, const NDFunction& b);
NDFunction nd_scaled_fn(const NDComplex& lambda, const NDFunction& b);

enum class DiffMethod { Auto, ClosedForm, FiniteDifference };

// DA/DX = f^-1(a'(f(X))). Auto uses the registered closed form when there is
// one and Richardson-extrapolated central differences otherwise.
NDNumber derivative(const NDFunction& a, const NDNumber& x, DiffMethod method = DiffMethod::Auto);
NDComplex derivative_complex(const NDFunction& a, const NDNumber& x, DiffMethod method = DiffMethod::Auto);

// The defining limit of (A(X (+) H) (-) A(X)) (/) H along f(H_k) = 2^-k,
// k = 1..steps, with Richardson extrapolation of the quotient sequence.
NDNumber derivative_by_limit(const NDFunction& a, const NDNumber& x, unsigned steps = 24);
NDComplex derivative_by_limit_complex(const NDFunction& a, const NDNumber& x, unsigned steps = 24);

// D/DX D/DX.
NDNumber laplacian(const NDFunction& a, const NDNumber& x, DiffMethod method = DiffMethod::Auto);

// x -> DA/DX as an NDFunction (closed form when registered).
NDFunction derivative_fn(const NDFunction& a);

// integral_X^Y A DX' = f^-1(integral_{f(X)}^{f(Y)} a dx).
NDNumber integral(const NDFunction& a, const NDNumber& from, const NDNumber& to, const QuadratureSpec& spec = {});
NDComplex integral_complex(const NDFunction& a, const NDNumber& from, const NDNumber& to,
                           const QuadratureSpec& spec = {});

// X -> integral_Y^X A DX'. The quadrature runs at the larger of the spec's
// working precision and the precision the result is requested at.
NDFunction antiderivative_fn(const NDFunction& a, const NDNumber& from, const QuadratureSpec& spec);

}  // namespace ndf
