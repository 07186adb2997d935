#include "ndfourier/fourier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "ndfourier/errors.hpp"

namespace ndf {

namespace {

long eval_bits(const ContextPtr& ctx) { return ctx->precision_bits() + 32; }

QuadratureSpec with_bits(QuadratureSpec spec, long bits) {
  spec.working_bits = std::max(spec.working_bits, bits);
  return spec;
}

void check_period(const Rational& period_lower) {
  if (sgn(period_lower) <= 0) throw DomainError("period f(T) must be positive, got " + to_string(period_lower));
}

void check_index(BasisIndex idx) {
  if (idx.kind == BasisKind::Sin && idx.n == 0) throw DomainError("S_0 vanishes and is not a basis element");
}

std::vector<Rational> merged_breaks(const NDFunction& a, const NDFunction& b, const Rational& lo, const Rational& hi) {
  std::vector<Rational> out = a.breakpoints(lo, hi);
  std::vector<Rational> more = b.breakpoints(lo, hi);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

// Panels needed so that each spans a few oscillations of the n-th harmonic.
QuadratureSpec for_harmonic(QuadratureSpec spec, unsigned n) {
  spec.initial_panels = std::max(spec.initial_panels, (n + 3) / 4);
  while (spec.max_panels < 4 * spec.initial_panels) spec.max_panels *= 2;
  return spec;
}

NDComplex scalar_product_impl(const NDFunction& a, const NDFunction& b, const Rational& period_lower,
                              const QuadratureSpec& spec) {
  check_period(period_lower);
  require_same_context(zero_prime(a.context()), zero_prime(b.context()));
  const ContextPtr& ctx = a.context();
  const Rational hi = period_lower / 2;
  const Rational lo = -hi;
  std::vector<Rational> breaks = merged_breaks(a, b, lo, hi);
  QuadratureSpec s = with_bits(spec, eval_bits(ctx));

  auto round = [&](const Real& v) { return NDNumber(ctx, v.rounded(ctx->precision_bits()).to_rational()); };

  // conj(a) b = (a1 b1 + a2 b2) + i (a1 b2 - a2 b1)
  RealFn re = [&](const Real& x) {
    Real v = a.lower_re(x) * b.lower_re(x);
    if (a.is_complex() && b.is_complex()) v += a.lower_im(x) * b.lower_im(x);
    return v;
  };
  NDNumber re_part = round(integrate(re, lo, hi, s, breaks).value);
  if (!a.is_complex() && !b.is_complex()) return NDComplex(re_part);

  RealFn im = [&](const Real& x) { return a.lower_re(x) * b.lower_im(x) - a.lower_im(x) * b.lower_re(x); };
  return NDComplex(re_part, round(integrate(im, lo, hi, s, breaks).value));
}

}  // namespace

Real basis_lower(BasisIndex idx, const Rational& period_lower, const Real& x) {
  check_index(idx);
  const long bits = x.precision();
  Real t(period_lower, bits);
  if (idx.n == 0) return sqrt(Real(1L, bits) / t);
  Real amp = sqrt(Real(2L, bits) / t);
  Real arg = pi(bits).scaled(1) * Real(static_cast<long>(idx.n), bits) * x / t;
  return amp * (idx.kind == BasisKind::Cos ? cos(arg) : sin(arg));
}

NDFunction basis_fn(BasisIndex idx, const Rational& period_lower, const ContextPtr& ctx) {
  check_index(idx);
  check_period(period_lower);
  const std::string label = std::string(idx.kind == BasisKind::Cos ? "c_" : "s_") + std::to_string(idx.n);
  if (idx.n == 0) {
    NDFunction fn(ctx, [period_lower](const Real& x) { return basis_lower({BasisKind::Cos, 0}, period_lower, x); },
                  label);
    fn.with_derivative([ctx] { return nd_constant_fn(ctx, 0); });
    return fn;
  }
  RealConst amplitude = [period_lower](long bits) { return sqrt(Real(2L, bits) / Real(period_lower, bits)); };
  const unsigned n = idx.n;
  RealConst frequency = [period_lower, n](long bits) {
    return pi(bits).scaled(1) * Real(static_cast<long>(n), bits) / Real(period_lower, bits);
  };
  return nd_sinusoid_fn(ctx, amplitude, frequency, idx.kind == BasisKind::Cos ? 0 : 3, label);
}

NDComplex scalar_product(const NDFunction& a, const NDFunction& b, const Rational& period_lower,
                         const QuadratureSpec& spec) {
  return scalar_product_impl(a, b, period_lower, spec);
}

FourierSeries analyze(const NDFunction& a, const Rational& period_lower, unsigned n_max, const QuadratureSpec& spec,
                      unsigned threads) {
  check_period(period_lower);
  if (a.is_complex()) throw DomainError("analyze() expects a real-valued function");
  const ContextPtr& ctx = a.context();

  // Job j < n_max + 1 is C_j, job n_max + 1 + j is S_{j+1}.
  const std::size_t jobs = 2 * static_cast<std::size_t>(n_max) + 1;
  std::vector<std::optional<NDNumber>> results(jobs);
  auto run = [&](std::size_t job) {
    BasisIndex idx = job <= n_max ? BasisIndex{BasisKind::Cos, static_cast<unsigned>(job)}
                                  : BasisIndex{BasisKind::Sin, static_cast<unsigned>(job - n_max)};
    NDFunction basis = basis_fn(idx, period_lower, ctx);
    results[job] = scalar_product_impl(basis, a, period_lower, for_harmonic(spec, idx.n)).re();
  };

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs));
  if (threads <= 1) {
    for (std::size_t j = 0; j < jobs; ++j) run(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t j = next++; j < jobs; j = next++) {
          try {
            run(j);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  FourierSeries out{ctx, period_lower, {}, {}};
  out.cos_coeffs.reserve(n_max + 1);
  out.sin_coeffs.reserve(n_max);
  for (std::size_t j = 0; j < jobs; ++j) (j <= n_max ? out.cos_coeffs : out.sin_coeffs).push_back(*results[j]);
  return out;
}

NDNumber reconstruct(const FourierSeries& series, const NDNumber& x, unsigned terms) {
  if (terms > series.n_max()) {
    throw DomainError("reconstruct asked for " + std::to_string(terms) + " terms but only " +
                      std::to_string(series.n_max()) + " were computed");
  }
  require_same_context(x, zero_prime(series.context));
  const ContextPtr& ctx = series.context;
  const Real point(x.lower(), eval_bits(ctx));
  auto basis_at = [&](BasisIndex idx) {
    return NDNumber(ctx, basis_lower(idx, series.period_lower, point).rounded(ctx->precision_bits()).to_rational());
  };
  NDNumber sum = mul(basis_at({BasisKind::Cos, 0}), series.cos_coeff(0));
  for (unsigned n = 1; n <= terms; ++n) {
    sum = add(sum, mul(basis_at({BasisKind::Cos, n}), series.cos_coeff(n)));
    sum = add(sum, mul(basis_at({BasisKind::Sin, n}), series.sin_coeff(n)));
  }
  return sum;
}

ParsevalSides parseval_check(const NDFunction& a, const NDFunction& b, const FourierSeries& series_a,
                             const FourierSeries& series_b, const QuadratureSpec& spec) {
  if (series_a.period_lower != series_b.period_lower || series_a.n_max() != series_b.n_max()) {
    throw DomainError("Parseval check needs both series on the same period and n_max");
  }
  NDComplex lhs = scalar_product(a, b, series_a.period_lower, spec);
  // Real series: <A|C_n> = conj(<C_n|A>) = <C_n|A>.
  NDNumber rhs = mul(series_a.cos_coeff(0), series_b.cos_coeff(0));
  for (unsigned n = 1; n <= series_a.n_max(); ++n) {
    rhs = add(rhs, mul(series_a.cos_coeff(n), series_b.cos_coeff(n)));
    rhs = add(rhs, mul(series_a.sin_coeff(n), series_b.sin_coeff(n)));
  }
  return {lhs, NDComplex(rhs)};
}

NDComplex fourier_transform(const NDFunction& a, const NDNumber& k, const Rational& period_lower,
                            const QuadratureSpec& spec) {
  // a e^{-i k x} = (a1 cos + a2 sin) + i (a2 cos - a1 sin); conj(e^{ikx}) a is
  // exactly <Exp(i'K.)|A>.
  return scalar_product(nd_exp_i_fn(k), a, period_lower, spec);
}

Rational spectrum_n_prime(const ContextPtr& ctx, unsigned long n) {
  switch (ctx->kind()) {
    case BijectionKind::Identity:
    case BijectionKind::TernaryLine:
    case BijectionKind::QuaternaryCantor:
    case BijectionKind::MiddleThird:
      return nat(ctx, Integer(n)).upper();
    default:
      throw UnsupportedContext("spectrum is defined for the identity and Cantor contexts, not " + ctx->name());
  }
}

}  // namespace ndf
