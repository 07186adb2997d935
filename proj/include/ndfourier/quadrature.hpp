#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ndfourier/rational.hpp"
#include "ndfourier/real.hpp"

namespace ndf {

// Composite Gauss-Legendre settings. The panel count doubles from
// initial_panels until three successive estimates agree to
// max(rel_tol * |I|, abs_tol), or max_panels is exceeded.
struct QuadratureSpec {
  unsigned nodes = 32;
  unsigned initial_panels = 1;
  unsigned max_panels = 1U << 14;
  double rel_tol = 1e-12;
  double abs_tol = 1e-15;
  long working_bits = 64;
};

struct GaussLegendreRule {
  long precision_bits;
  std::vector<Real> nodes;    // on [-1, 1], ascending
  std::vector<Real> weights;
};

// Cached per (nodes, precision). Thread-safe.
const GaussLegendreRule& gauss_legendre(unsigned nodes, long precision_bits);

using RealFn = std::function<Real(const Real&)>;

struct QuadratureResult {
  Real value;
  Real error_estimate;
  unsigned panels;
};

// Integral of fn over [lo, hi] (hi < lo gives the negated integral).
// `breakpoints` inside (lo, hi) split the range so that no panel straddles a
// discontinuity. Throws QuadratureNonConvergent.
QuadratureResult integrate(const RealFn& fn, const Rational& lo, const Rational& hi, const QuadratureSpec& spec,
                           std::span<const Rational> breakpoints = {});

}  // namespace ndf
