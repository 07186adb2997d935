#include "ndfourier/sawtooth.hpp"

#include "ndfourier/errors.hpp"

namespace ndf {

Rational sawtooth_lower(const Rational& x, const Rational& period_lower) {
  Rational shifted = x / period_lower + Rational(1, 2);
  return x - period_lower * Rational(floor_of(shifted));
}

Real sawtooth_lower(const Real& x, const Rational& period_lower) {
  const long bits = x.precision();
  Real t(period_lower, bits);
  return x - t * floor(x / t + Real(0.5, bits));
}

NDFunction sawtooth_nd(const ContextPtr& ctx, const Rational& period_lower) {
  if (sgn(period_lower) <= 0) throw DomainError("sawtooth period must be positive");
  NDFunction fn(ctx, [period_lower](const Real& x) { return sawtooth_lower(x, period_lower); },
                "sawtooth(T=" + to_string(period_lower) + ")");
  fn.with_breakpoints([period_lower](const Rational& lo, const Rational& hi) {
    // Jumps sit at (k + 1/2) T.
    std::vector<Rational> out;
    Rational k(floor_of(lo / period_lower - Rational(1, 2)));
    for (Rational p = (k + Rational(1, 2)) * period_lower; p <= hi; p += period_lower) {
      if (p >= lo) out.push_back(p);
    }
    return out;
  });
  return fn;
}

std::string to_string(CoordinateSystem c) {
  switch (c) {
    case CoordinateSystem::Lower:
      return "lower";
    case CoordinateSystem::Upper:
      return "upper";
    case CoordinateSystem::Map:
      return "map";
  }
  return "?";
}

std::vector<Rational> uniform_samples(const Rational& x_min, const Rational& x_max, unsigned samples) {
  if (samples < 2) throw DomainError("figure data needs at least 2 samples");
  if (!(x_min < x_max)) throw DomainError("sampling window must have x_min < x_max");
  std::vector<Rational> out;
  out.reserve(samples);
  const Rational step = (x_max - x_min) / samples;
  for (unsigned i = 0; i < samples; ++i) out.push_back(x_min + step * i);
  return out;
}

std::vector<FigurePoint> figure_data(const FigureRequest& request, const ContextPtr& ctx,
                                     const FourierSeries* series) {
  const bool fig1 = request.kind == FigureKind::Fig1Upper || request.kind == FigureKind::Fig1Lower;
  const Rational period = series ? series->period_lower : request.period_lower;
  const Rational x_min = request.x_min.value_or(fig1 ? Rational(-2) : Rational(-period / 2));
  const Rational x_max = request.x_max.value_or(fig1 ? Rational(2) : Rational(period / 2));
  std::vector<Rational> xs = uniform_samples(x_min, x_max, request.samples);

  std::vector<FigurePoint> out;
  out.reserve(xs.size());
  switch (request.kind) {
    case FigureKind::Fig1Upper:
    case FigureKind::Fig1Lower: {
      ContextPtr map_ctx = make_context(request.kind == FigureKind::Fig1Upper
                                            ? ArithmeticContext::ternary_line(Branch::Minus, ctx->precision_bits())
                                            : ArithmeticContext::quaternary(Branch::Plus, ctx->precision_bits()));
      for (const Rational& x : xs) out.push_back({x, map_ctx->inverse(x), CoordinateSystem::Map});
      break;
    }
    case FigureKind::Fig2Upper:
      for (const Rational& x : xs) out.push_back({x, sawtooth_lower(x, period), CoordinateSystem::Lower});
      break;
    case FigureKind::Fig2Lower:
      for (const Rational& x : xs) {
        out.push_back({ctx->inverse(x), ctx->inverse(sawtooth_lower(x, period)), CoordinateSystem::Upper});
      }
      break;
    case FigureKind::Fig3Terms: {
      if (!series) throw DomainError("figure 3 needs precomputed Fourier coefficients");
      for (const Rational& x : xs) {
        NDNumber point(series->context, x);
        NDNumber value = reconstruct(*series, point, request.terms);
        out.push_back({point.upper(), value.upper(), CoordinateSystem::Upper});
      }
      break;
    }
  }
  return out;
}

}  // namespace ndf
