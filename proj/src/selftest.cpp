#include "ndfourier/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ndfourier/complex.hpp"
#include "ndfourier/errors.hpp"
#include "ndfourier/fourier.hpp"

namespace ndf {

namespace {

double deviation(const NDNumber& x, const NDNumber& y) {
  Rational d = x.lower() - y.lower();
  return std::fabs(d.get_d());
}

double deviation(const NDComplex& x, const NDComplex& y) { return lower_distance(x, y).get_d(); }

double relative(const NDNumber& x, const NDNumber& y) {
  return deviation(x, y) / std::max(1.0, std::fabs(y.lower().get_d()));
}

class Tracker {
 public:
  Tracker(std::string name, double tolerance) {
    result_.name = std::move(name);
    result_.tolerance = tolerance;
    result_.passed = true;
  }

  void record(double dev) {
    ++result_.cases;
    if (!(dev <= result_.tolerance)) result_.passed = false;
    if (std::isnan(dev) || dev > result_.max_deviation) result_.max_deviation = dev;
  }

  // A law that has to hold exactly; `dev` is still reported.
  void record_exact(bool holds, double dev) {
    ++result_.cases;
    if (!holds) result_.passed = false;
    result_.max_deviation = std::max(result_.max_deviation, dev);
  }

  void fail(const std::string& why) {
    result_.passed = false;
    result_.note = why;
  }

  SuiteResult take(std::string note = {}) {
    if (result_.note.empty()) result_.note = std::move(note);
    return std::move(result_);
  }

 private:
  SuiteResult result_;
};

template <class Body>
SuiteResult guarded(Tracker tracker, Body&& body) {
  try {
    body(tracker);
  } catch (const std::exception& e) {
    tracker.fail(e.what());
  }
  return tracker.take();
}

RealConst two_pi_times(unsigned n, const Rational& period_lower) {
  return [n, period_lower](long bits) { return Real(2L * n, bits) * pi(bits) / Real(period_lower, bits); };
}

NDFunction trig_term(const ContextPtr& ctx, const Rational& amp, unsigned n, bool sine) {
  return nd_sinusoid_fn(ctx, rational_const(amp), two_pi_times(n, 1), sine ? 3 : 0,
                        to_string(amp) + (sine ? " sin(2 pi " : " cos(2 pi ") + std::to_string(n) + " x)");
}

// Real trigonometric polynomial of degree <= 3 with period 1.
NDFunction random_trig_polynomial(const ContextPtr& ctx, RationalSampler& sample) {
  NDFunction out = nd_constant_fn(ctx, sample());
  for (unsigned n = 1; n <= 3; ++n) {
    out = nd_sum_fn(out, trig_term(ctx, sample(), n, false));
    out = nd_sum_fn(out, trig_term(ctx, sample(), n, true));
  }
  return out;
}

SuiteResult arithmetic_laws(const ContextPtr& ctx, const SelftestOptions& opt) {
  return guarded(Tracker("arithmetic-laws", 0.0), [&](Tracker& t) {
    RationalSampler sample(opt.seed);
    const NDNumber zero = zero_prime(ctx);
    const NDNumber one = one_prime(ctx);
    {
      NDNumber m1 = neg(one);
      NDNumber sq = mul(m1, m1);
      t.record_exact(sq == one, deviation(sq, one));
    }
    std::uniform_int_distribution<long> small(-40, 40);
    for (unsigned i = 0; i < opt.random_cases; ++i) {
      NDNumber x(ctx, sample()), y(ctx, sample()), z(ctx, sample());
      auto check = [&](const NDNumber& l, const NDNumber& r) { t.record_exact(l == r, deviation(l, r)); };
      check(add(add(x, y), z), add(x, add(y, z)));
      check(mul(mul(x, y), z), mul(x, mul(y, z)));
      check(add(x, y), add(y, x));
      check(mul(x, y), mul(y, x));
      check(mul(x, add(y, z)), add(mul(x, y), mul(x, z)));
      check(sub(x, x), zero);
      check(add(x, zero), x);
      check(mul(x, one), x);
      check(pow_nat(x, 3), mul(x, mul(x, x)));
      if (!(x == zero)) check(div(x, x), one);
      long m = small(sample.engine()), n = small(sample.engine());
      check(add(nat(ctx, m), nat(ctx, n)), nat(ctx, m + n));
      check(mul(nat(ctx, m), nat(ctx, n)), nat(ctx, m * n));
    }
  });
}

SuiteResult negatives(const ContextPtr& ctx, const SelftestOptions& opt) {
  const double tol = ctx->exact() ? 0.0 : std::ldexp(1.0, -static_cast<int>(ctx->precision_bits() - 8));
  return guarded(Tracker("negatives", tol), [&](Tracker& t) {
    RationalSampler sample(opt.seed + 1, 20, 16);
    const NDNumber zero = zero_prime(ctx);
    for (unsigned i = 0; i < opt.random_cases; ++i) {
      NDNumber x(ctx, sample());
      NDNumber mx = neg(x);
      NDNumber s = add(mx, x);
      t.record_exact(s == zero, deviation(s, zero));
      if (ctx->kind() == BijectionKind::Fechner) {
        // (-)X = exp(-2b/a) / X
        const long bits = ctx->precision_bits();
        Real expect = exp(Real(Rational(-2 * ctx->b() / ctx->a()), bits + 32)) / Real(x.upper(), bits + 32);
        Real got(mx.upper(), bits + 32);
        t.record(std::fabs(((got - expect) / expect).to_double()));
      } else {
        Rational back = ctx->forward(mx.upper());
        t.record_exact(back == -x.lower(), std::fabs(Rational(back + x.lower()).get_d()));
      }
    }
  });
}

SuiteResult trig_identities(const ContextPtr& ctx, const SelftestOptions& opt) {
  return guarded(Tracker("trig-identity", std::ldexp(1.0, -100)), [&](Tracker& t) {
    RationalSampler sample(opt.seed + 2);
    const NDNumber one = one_prime(ctx);
    const NDComplex one_c(one);
    for (unsigned i = 0; i < opt.random_cases; ++i) {
      NDNumber phi(ctx, sample());
      NDNumber c = nd_cos(phi), s = nd_sin(phi);
      t.record(deviation(add(mul(c, c), mul(s, s)), one));
      t.record(deviation(cmul(cexp_i(phi), cexp_i(neg(phi))), one_c));
    }
  });
}

SuiteResult fundamental_theorems(const ContextPtr& ctx, const SelftestOptions& opt) {
  return guarded(Tracker("ftc", 1e-10), [&](Tracker& t) {
    RationalSampler sample(opt.seed + 3, 32, 16);
    auto point = [&] {
      Rational q = sample();
      return NDNumber(ctx, q / 8);  // |f(X)| <= 4
    };
    for (const NDFunction& a : smooth_test_set(ctx)) {
      NDFunction da = derivative_fn(a);
      for (int k = 0; k < 3; ++k) {
        NDNumber x = point(), y = point();
        // integral_X^Y DA/DX = A(Y) (-) A(X)
        t.record(relative(integral(da, x, y, opt.quadrature), sub(a(y), a(x))));
      }
      // D/DX integral_Y^X A = A(X)
      NDNumber base = point();
      NDFunction big_a = antiderivative_fn(a, base, opt.quadrature);
      NDNumber x = point();
      t.record(relative(derivative(big_a, x, DiffMethod::FiniteDifference), a(x)));
    }
  });
}

SuiteResult orthonormality(const ContextPtr& ctx, const SelftestOptions& opt) {
  return guarded(Tracker("orthonormality", 1e-10), [&](Tracker& t) {
    std::vector<NDFunction> basis;
    for (unsigned n = 0; n <= opt.max_harmonic; ++n) basis.push_back(basis_fn({BasisKind::Cos, n}, 1, ctx));
    for (unsigned n = 1; n <= opt.max_harmonic; ++n) basis.push_back(basis_fn({BasisKind::Sin, n}, 1, ctx));
    const NDComplex one(one_prime(ctx)), zero(zero_prime(ctx));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i; j < basis.size(); ++j) {
        NDComplex sp = scalar_product(basis[i], basis[j], 1, opt.quadrature);
        t.record(deviation(sp, i == j ? one : zero));
      }
    }
  });
}

SuiteResult parseval(const ContextPtr& ctx, const SelftestOptions& opt) {
  return guarded(Tracker("parseval", 1e-10), [&](Tracker& t) {
    RationalSampler sample(opt.seed + 4, 12, 4);
    for (int k = 0; k < 2; ++k) {
      NDFunction a = random_trig_polynomial(ctx, sample);
      NDFunction b = random_trig_polynomial(ctx, sample);
      // Degree 3 polynomials: n_max = 4 leaves no truncation error.
      FourierSeries sa = analyze(a, 1, 4, opt.quadrature, 1);
      FourierSeries sb = analyze(b, 1, 4, opt.quadrature, 1);
      ParsevalSides sides = parseval_check(a, b, sa, sb, opt.quadrature);
      t.record(deviation(sides.lhs, sides.rhs));
    }
  });
}

SuiteResult scalar_product_laws(const ContextPtr& ctx, const SelftestOptions& opt) {
  return guarded(Tracker("scalar-product-laws", 1e-10), [&](Tracker& t) {
    RationalSampler sample(opt.seed + 5, 12, 4);
    for (unsigned i = 0; i < opt.function_pairs; ++i) {
      NDFunction a = random_test_function(ctx, sample);
      NDFunction b = random_test_function(ctx, sample);
      NDFunction c = random_test_function(ctx, sample);
      NDComplex lambda(NDNumber(ctx, sample()), NDNumber(ctx, sample()));
      NDComplex ab = scalar_product(a, b, 1, opt.quadrature);
      NDComplex ba = scalar_product(b, a, 1, opt.quadrature);
      NDComplex ac = scalar_product(a, c, 1, opt.quadrature);
      t.record(deviation(ab, conj(ba)));
      t.record(deviation(scalar_product(a, nd_sum_fn(b, c), 1, opt.quadrature), cadd(ab, ac)));
      t.record(deviation(scalar_product(a, nd_scaled_fn(lambda, b), 1, opt.quadrature), cmul(lambda, ab)));
    }
  });
}

}  // namespace

NDNumber random_element(const ContextPtr& ctx, RationalSampler& sample) { return NDNumber(ctx, sample()); }

NDFunction random_test_function(const ContextPtr& ctx, RationalSampler& sample) {
  std::uniform_int_distribution<int> freq(1, 6);
  const Rational p = sample(), q = sample(), r = sample(), s = sample(), u = sample();
  const long k = freq(sample.engine()), m = freq(sample.engine());
  LowerFn re = [p, q, r, k](const Real& x) {
    const long bits = x.precision();
    return Real(p, bits) * x * x + Real(q, bits) * sin(Real(k, bits) * x) + Real(r, bits);
  };
  LowerFn im = [s, u, m](const Real& x) {
    const long bits = x.precision();
    return Real(s, bits) * cos(Real(m, bits) * x) + Real(u, bits) * x;
  };
  return NDFunction(ctx, re, im,
                    to_string(p) + " x^2 + " + to_string(q) + " sin(" + std::to_string(k) + " x) + " +
                        to_string(r) + " + i (" + to_string(s) + " cos(" + std::to_string(m) + " x) + " +
                        to_string(u) + " x)");
}

std::vector<NDFunction> smooth_test_set(const ContextPtr& ctx) {
  std::vector<NDFunction> out;
  out.push_back(nd_power_fn(ctx, 3, make_rational(1, 2)));
  out.push_back(nd_sin_fn(NDNumber(ctx, 2)));
  out.push_back(nd_cos_fn(NDNumber(ctx, 3)));
  out.push_back(nd_exp_fn(NDNumber(ctx, make_rational(1, 2))));
  out.push_back(nd_sum_fn(nd_power_fn(ctx, 2, -1), nd_sin_fn(NDNumber(ctx, 5))));
  return out;
}

std::vector<SuiteResult> run_selftest(const ContextPtr& ctx, const SelftestOptions& options) {
  std::vector<SuiteResult> out;
  out.push_back(arithmetic_laws(ctx, options));
  out.push_back(negatives(ctx, options));
  out.push_back(trig_identities(ctx, options));
  out.push_back(fundamental_theorems(ctx, options));
  out.push_back(orthonormality(ctx, options));
  out.push_back(parseval(ctx, options));
  out.push_back(scalar_product_laws(ctx, options));
  return out;
}

}  // namespace ndf
