#include "ndfourier/calculus.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "ndfourier/errors.hpp"

namespace ndf {

namespace {

long eval_bits(const ContextPtr& ctx) { return ctx->precision_bits() + 32; }

// Lowercase point f(X) at `bits`.
Real lower_point(const NDNumber& x, long bits) { return Real(x.lower(), bits); }

NDNumber rounded_number(const ContextPtr& ctx, const Real& value) {
  return NDNumber(ctx, value.rounded(ctx->precision_bits()).to_rational());
}

QuadratureSpec with_bits(QuadratureSpec spec, long bits) {
  spec.working_bits = std::max(spec.working_bits, bits);
  return spec;
}

struct Extrapolated {
  Real value;
  Real error;
};

// Richardson tableau over estimates taken at h, h/2, h/4, ... whose error
// expands in powers of h^order. Returns the diagonal entry with the smallest
// change from its predecessor.
class Richardson {
 public:
  Richardson(int order, long bits) : order_(order), bits_(bits) {}

  void push(Real estimate) {
    std::vector<Real> row{std::move(estimate)};
    for (std::size_t j = 1; j <= previous_.size(); ++j) {
      Real factor(1L, bits_);
      factor = factor.scaled(static_cast<long>(order_ * j)) - Real(1L, bits_);
      row.push_back(row[j - 1] + (row[j - 1] - previous_[j - 1]) / factor);
    }
    if (!previous_.empty()) {
      Real change = abs(row.back() - previous_.back());
      if (!best_ || change < best_->error) best_ = Extrapolated{row.back(), change};
    }
    previous_ = std::move(row);
  }

  const std::optional<Extrapolated>& best() const { return best_; }

 private:
  int order_;
  long bits_;
  std::vector<Real> previous_;
  std::optional<Extrapolated> best_;
};

Real tolerance_for(const Real& value, long precision_bits) {
  Real scale = abs(value);
  Real one(1L, value.precision());
  if (scale < one) scale = one;
  return scale.scaled(-(precision_bits / 2));
}

constexpr long kCentralStartExponent = 4;
constexpr unsigned kCentralLevels = 20;

// Central differences (a(x+h) - a(x-h)) / 2h, error series in h^2.
Extrapolated central_first(const LowerFn& fn, const Real& x) {
  const long bits = x.precision();
  Richardson tableau(2, bits);
  for (unsigned k = 0; k < kCentralLevels; ++k) {
    long e = -kCentralStartExponent - static_cast<long>(k);
    Real h = Real(1L, bits).scaled(e);
    tableau.push((fn(x + h) - fn(x - h)).scaled(-e - 1));
  }
  return *tableau.best();
}

// (a(x+h) - 2a(x) + a(x-h)) / h^2, error series in h^2.
Extrapolated central_second(const LowerFn& fn, const Real& x) {
  const long bits = x.precision();
  Richardson tableau(2, bits);
  const Real center = fn(x).scaled(1);
  for (unsigned k = 0; k < kCentralLevels; ++k) {
    long e = -kCentralStartExponent - static_cast<long>(k);
    Real h = Real(1L, bits).scaled(e);
    tableau.push((fn(x + h) - center + fn(x - h)).scaled(-2 * e));
  }
  return *tableau.best();
}

// The difference-quotient limit along h_k = 2^-k: forward quotients, error
// series in h.
Extrapolated forward_limit(const LowerFn& fn, const Real& x, unsigned steps) {
  const long bits = x.precision();
  Richardson tableau(1, bits);
  const Real base = fn(x);
  for (unsigned k = 1; k <= steps; ++k) {
    Real h = Real(1L, bits).scaled(-static_cast<long>(k));
    tableau.push((fn(x + h) - base).scaled(static_cast<long>(k)));
  }
  if (!tableau.best()) throw NonConvergent("derivative_by_limit needs at least two steps");
  return *tableau.best();
}

// Working precision for difference schemes: enough to absorb the 2^k
// amplification of rounding in the quotients.
long difference_bits(const ContextPtr& ctx) { return 2 * ctx->precision_bits() + 64; }

Real finite_difference(const LowerFn& fn, const NDNumber& x, bool second) {
  const ContextPtr& ctx = x.context();
  Real point = lower_point(x, difference_bits(ctx));
  Extrapolated r = second ? central_second(fn, point) : central_first(fn, point);
  if (r.error > tolerance_for(r.value, ctx->precision_bits())) {
    throw NonDifferentiable("finite differences at f(X) = " + to_decimal(x.lower()) + " did not settle (spread " +
                            r.error.to_decimal(6) + ")");
  }
  return r.value;
}

Real limit_value(const LowerFn& fn, const NDNumber& x, unsigned steps) {
  const ContextPtr& ctx = x.context();
  Real point = lower_point(x, difference_bits(ctx));
  Extrapolated r = forward_limit(fn, point, steps);
  if (r.error > tolerance_for(r.value, ctx->precision_bits())) {
    throw NonConvergent("difference quotients at f(X) = " + to_decimal(x.lower()) + " fail the Cauchy check (spread " +
                        r.error.to_decimal(6) + ")");
  }
  return r.value;
}

}  // namespace

NDFunction::NDFunction(ContextPtr ctx, LowerFn re, std::string description)
    : ctx_(std::move(ctx)), re_(std::move(re)), description_(std::move(description)) {}

NDFunction::NDFunction(ContextPtr ctx, LowerFn re, LowerFn im, std::string description)
    : ctx_(std::move(ctx)), re_(std::move(re)), im_(std::move(im)), description_(std::move(description)) {}

NDFunction& NDFunction::with_breakpoints(BreakpointFn fn) {
  breakpoints_ = std::move(fn);
  return *this;
}

NDFunction& NDFunction::with_derivative(std::function<NDFunction()> factory) {
  derivative_ = std::move(factory);
  return *this;
}

NDFunction NDFunction::closed_form_derivative() const {
  if (!derivative_) throw NonDifferentiable("no closed-form derivative registered for " + description_);
  return derivative_();
}

std::vector<Rational> NDFunction::breakpoints(const Rational& lo, const Rational& hi) const {
  if (!breakpoints_) return {};
  return breakpoints_(lo, hi);
}

NDNumber NDFunction::operator()(const NDNumber& x) const {
  require_same_context(x, zero_prime(ctx_));
  return rounded_number(ctx_, re_(lower_point(x, eval_bits(ctx_))));
}

NDComplex NDFunction::eval_complex(const NDNumber& x) const {
  require_same_context(x, zero_prime(ctx_));
  Real point = lower_point(x, eval_bits(ctx_));
  return NDComplex(rounded_number(ctx_, re_(point)), rounded_number(ctx_, lower_im(point)));
}

RealConst rational_const(const Rational& value) {
  return [value](long bits) { return Real(value, bits); };
}

NDFunction nd_constant_fn(const ContextPtr& ctx, const Rational& value) {
  NDFunction fn(ctx, [value](const Real& x) { return Real(value, x.precision()); }, "const " + to_string(value));
  fn.with_derivative([ctx] { return nd_constant_fn(ctx, 0); });
  return fn;
}

NDFunction nd_power_fn(const ContextPtr& ctx, unsigned n, const Rational& amplitude) {
  if (n == 0) return nd_constant_fn(ctx, amplitude);
  NDFunction fn(
      ctx,
      [n, amplitude](const Real& x) {
        Real out(amplitude, x.precision());
        for (unsigned i = 0; i < n; ++i) out *= x;
        return out;
      },
      to_string(amplitude) + " x^" + std::to_string(n));
  fn.with_derivative([ctx, n, amplitude] { return nd_power_fn(ctx, n - 1, amplitude * n); });
  return fn;
}

NDFunction nd_sinusoid_fn(const ContextPtr& ctx, RealConst amplitude, RealConst frequency, int quarter_turns,
                          std::string description) {
  const int q = ((quarter_turns % 4) + 4) % 4;
  NDFunction fn(
      ctx,
      [amplitude, frequency, q](const Real& x) {
        const long bits = x.precision();
        Real arg = frequency(bits) * x;
        Real amp = amplitude(bits);
        switch (q) {
          case 0:
            return amp * cos(arg);
          case 1:
            return -(amp * sin(arg));
          case 2:
            return -(amp * cos(arg));
          default:
            return amp * sin(arg);
        }
      },
      description);
  fn.with_derivative([ctx, amplitude, frequency, q, description] {
    RealConst scaled_amp = [amplitude, frequency](long bits) { return amplitude(bits) * frequency(bits); };
    return nd_sinusoid_fn(ctx, scaled_amp, frequency, q + 1, "d/dx " + description);
  });
  return fn;
}

NDFunction nd_sin_fn(const NDNumber& k) {
  return nd_sinusoid_fn(k.context(), rational_const(1), rational_const(k.lower()), 3,
                        "sin(" + to_string(k.lower()) + " x)");
}

NDFunction nd_cos_fn(const NDNumber& k) {
  return nd_sinusoid_fn(k.context(), rational_const(1), rational_const(k.lower()), 0,
                        "cos(" + to_string(k.lower()) + " x)");
}

namespace {

NDFunction scaled_exp_fn(const ContextPtr& ctx, const Rational& amplitude, const Rational& rate) {
  NDFunction fn(
      ctx, [amplitude, rate](const Real& x) { return Real(amplitude, x.precision()) * exp(Real(rate, x.precision()) * x); },
      to_string(amplitude) + " exp(" + to_string(rate) + " x)");
  fn.with_derivative([ctx, amplitude, rate] { return scaled_exp_fn(ctx, amplitude * rate, rate); });
  return fn;
}

// (amp_re + i amp_im) e^{i k x}
NDFunction scaled_exp_i_fn(const ContextPtr& ctx, const Rational& amp_re, const Rational& amp_im, const Rational& k) {
  NDFunction fn(
      ctx,
      [amp_re, amp_im, k](const Real& x) {
        const long bits = x.precision();
        Real arg = Real(k, bits) * x;
        return Real(amp_re, bits) * cos(arg) - Real(amp_im, bits) * sin(arg);
      },
      [amp_re, amp_im, k](const Real& x) {
        const long bits = x.precision();
        Real arg = Real(k, bits) * x;
        return Real(amp_re, bits) * sin(arg) + Real(amp_im, bits) * cos(arg);
      },
      "(" + to_string(amp_re) + " + i " + to_string(amp_im) + ") exp(i " + to_string(k) + " x)");
  fn.with_derivative([ctx, amp_re, amp_im, k] { return scaled_exp_i_fn(ctx, -amp_im * k, amp_re * k, k); });
  return fn;
}

}  // namespace

NDFunction nd_exp_fn(const NDNumber& k) { return scaled_exp_fn(k.context(), 1, k.lower()); }

NDFunction nd_exp_i_fn(const NDNumber& k) { return scaled_exp_i_fn(k.context(), 1, 0, k.lower()); }

namespace {

BreakpointFn merged_breakpoints(const NDFunction& a, const NDFunction& b) {
  return [a, b](const Rational& lo, const Rational& hi) {
    std::vector<Rational> out = a.breakpoints(lo, hi);
    std::vector<Rational> more = b.breakpoints(lo, hi);
    out.insert(out.end(), more.begin(), more.end());
    return out;
  };
}

}  // namespace

NDFunction nd_sum_fn(const NDFunction& a, const NDFunction& b) {
  require_same_context(zero_prime(a.context()), zero_prime(b.context()));
  LowerFn re = [a, b](const Real& x) { return a.lower_re(x) + b.lower_re(x); };
  std::string label = "(" + a.description() + ") + (" + b.description() + ")";
  NDFunction out = (a.is_complex() || b.is_complex())
                       ? NDFunction(a.context(), re, [a, b](const Real& x) { return a.lower_im(x) + b.lower_im(x); }, label)
                       : NDFunction(a.context(), re, label);
  out.with_breakpoints(merged_breakpoints(a, b));
  if (a.has_closed_form_derivative() && b.has_closed_form_derivative()) {
    out.with_derivative([a, b] { return nd_sum_fn(a.closed_form_derivative(), b.closed_form_derivative()); });
  }
  return out;
}

NDFunction nd_scaled_fn(const NDComplex& lambda, const NDFunction& b) {
  require_same_context(lambda.re(), zero_prime(b.context()));
  const Rational lr = lambda.re().lower();
  const Rational li = lambda.im().lower();
  std::string label = "(" + to_string(lr) + " + i " + to_string(li) + ") (" + b.description() + ")";
  // (lr + i li)(b1 + i b2) = (lr b1 - li b2) + i (lr b2 + li b1)
  LowerFn re = [lr, li, b](const Real& x) {
    const long bits = x.precision();
    return Real(lr, bits) * b.lower_re(x) - Real(li, bits) * b.lower_im(x);
  };
  NDFunction out = (li != 0 || b.is_complex()) ? NDFunction(b.context(), re,
                                                            [lr, li, b](const Real& x) {
                                                              const long bits = x.precision();
                                                              return Real(lr, bits) * b.lower_im(x) +
                                                                     Real(li, bits) * b.lower_re(x);
                                                            },
                                                            label)
                                               : NDFunction(b.context(), re, label);
  out.with_breakpoints([b](const Rational& lo, const Rational& hi) { return b.breakpoints(lo, hi); });
  if (b.has_closed_form_derivative()) {
    out.with_derivative([lambda, b] { return nd_scaled_fn(lambda, b.closed_form_derivative()); });
  }
  return out;
}

NDNumber derivative(const NDFunction& a, const NDNumber& x, DiffMethod method) {
  require_same_context(x, zero_prime(a.context()));
  if (method == DiffMethod::ClosedForm || (method == DiffMethod::Auto && a.has_closed_form_derivative())) {
    return a.closed_form_derivative()(x);
  }
  return rounded_number(a.context(), finite_difference(a.re_fn(), x, false));
}

NDComplex derivative_complex(const NDFunction& a, const NDNumber& x, DiffMethod method) {
  require_same_context(x, zero_prime(a.context()));
  if (method == DiffMethod::ClosedForm || (method == DiffMethod::Auto && a.has_closed_form_derivative())) {
    return a.closed_form_derivative().eval_complex(x);
  }
  LowerFn im = [&a](const Real& t) { return a.lower_im(t); };
  return NDComplex(rounded_number(a.context(), finite_difference(a.re_fn(), x, false)),
                   rounded_number(a.context(), finite_difference(im, x, false)));
}

NDNumber derivative_by_limit(const NDFunction& a, const NDNumber& x, unsigned steps) {
  require_same_context(x, zero_prime(a.context()));
  return rounded_number(a.context(), limit_value(a.re_fn(), x, steps));
}

NDComplex derivative_by_limit_complex(const NDFunction& a, const NDNumber& x, unsigned steps) {
  require_same_context(x, zero_prime(a.context()));
  LowerFn im = [&a](const Real& t) { return a.lower_im(t); };
  return NDComplex(rounded_number(a.context(), limit_value(a.re_fn(), x, steps)),
                   rounded_number(a.context(), limit_value(im, x, steps)));
}

NDNumber laplacian(const NDFunction& a, const NDNumber& x, DiffMethod method) {
  require_same_context(x, zero_prime(a.context()));
  if (method == DiffMethod::ClosedForm ||
      (method == DiffMethod::Auto && a.has_closed_form_derivative() &&
       a.closed_form_derivative().has_closed_form_derivative())) {
    return a.closed_form_derivative().closed_form_derivative()(x);
  }
  return rounded_number(a.context(), finite_difference(a.re_fn(), x, true));
}

NDFunction derivative_fn(const NDFunction& a) {
  if (a.has_closed_form_derivative()) return a.closed_form_derivative();
  auto pointwise = [](LowerFn fn) {
    return [fn = std::move(fn)](const Real& x) {
      Real wide = x.rounded(2 * x.precision() + 64);
      return central_first(fn, wide).value.rounded(x.precision());
    };
  };
  LowerFn re = pointwise(a.re_fn());
  if (!a.is_complex()) return NDFunction(a.context(), re, "d/dx " + a.description());
  LowerFn im = pointwise([a](const Real& t) { return a.lower_im(t); });
  return NDFunction(a.context(), re, im, "d/dx " + a.description());
}

namespace {

Real lower_integral(const LowerFn& fn, const NDFunction& a, const Rational& lo, const Rational& hi,
                    const QuadratureSpec& spec) {
  const Rational& left = lo < hi ? lo : hi;
  const Rational& right = lo < hi ? hi : lo;
  std::vector<Rational> breaks = a.breakpoints(left, right);
  return integrate(fn, lo, hi, spec, breaks).value;
}

}  // namespace

NDNumber integral(const NDFunction& a, const NDNumber& from, const NDNumber& to, const QuadratureSpec& spec) {
  require_same_context(from, to);
  require_same_context(from, zero_prime(a.context()));
  QuadratureSpec s = with_bits(spec, eval_bits(a.context()));
  return rounded_number(a.context(), lower_integral(a.re_fn(), a, from.lower(), to.lower(), s));
}

NDComplex integral_complex(const NDFunction& a, const NDNumber& from, const NDNumber& to, const QuadratureSpec& spec) {
  require_same_context(from, to);
  require_same_context(from, zero_prime(a.context()));
  QuadratureSpec s = with_bits(spec, eval_bits(a.context()));
  LowerFn im = [&a](const Real& t) { return a.lower_im(t); };
  return NDComplex(rounded_number(a.context(), lower_integral(a.re_fn(), a, from.lower(), to.lower(), s)),
                   rounded_number(a.context(), lower_integral(im, a, from.lower(), to.lower(), s)));
}

NDFunction antiderivative_fn(const NDFunction& a, const NDNumber& from, const QuadratureSpec& spec) {
  require_same_context(from, zero_prime(a.context()));
  const Rational start = from.lower();
  auto make = [a, start, spec](bool imaginary) -> LowerFn {
    return [a, start, spec, imaginary](const Real& x) {
      QuadratureSpec s = with_bits(spec, x.precision());
      LowerFn fn = imaginary ? LowerFn([&a](const Real& t) { return a.lower_im(t); }) : a.re_fn();
      return lower_integral(fn, a, start, x.to_rational(), s).rounded(x.precision());
    };
  };
  std::string label = "integral from " + to_string(start) + " of " + a.description();
  if (!a.is_complex()) return NDFunction(a.context(), make(false), label);
  return NDFunction(a.context(), make(false), make(true), label);
}

}  // namespace ndf
