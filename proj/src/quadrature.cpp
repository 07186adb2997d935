#include "ndfourier/quadrature.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "ndfourier/errors.hpp"

namespace ndf {

namespace {

// Legendre P_n(x) and P_{n-1}(x) by the three-term recurrence.
std::pair<Real, Real> legendre_pair(unsigned n, const Real& x) {
  const long bits = x.precision();
  Real p0(1L, bits);
  Real p1 = x;
  for (unsigned k = 2; k <= n; ++k) {
    Real p2 = (Real(static_cast<long>(2 * k - 1), bits) * x * p1 - Real(static_cast<long>(k - 1), bits) * p0) /
              Real(static_cast<long>(k), bits);
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  return {p1, p0};
}

GaussLegendreRule build_rule(unsigned n, long precision_bits) {
  const long bits = precision_bits + 32;
  GaussLegendreRule rule{precision_bits, std::vector<Real>(n, Real(precision_bits)),
                         std::vector<Real>(n, Real(precision_bits))};
  const Real one(1L, bits);
  const Real pi_value = pi(bits);
  const Real tolerance = one.scaled(-(bits - 8));
  for (unsigned i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi's initial guess for the i-th largest root.
    Real x = cos(pi_value * Real((static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5), bits));
    Real dp(bits);
    for (int iter = 0; iter < 200; ++iter) {
      auto [pn, pn1] = legendre_pair(n, x);
      dp = Real(static_cast<long>(n), bits) * (x * pn - pn1) / (x * x - one);
      Real step = pn / dp;
      x -= step;
      if (abs(step) <= tolerance) break;
    }
    auto [pn, pn1] = legendre_pair(n, x);
    dp = Real(static_cast<long>(n), bits) * (x * pn - pn1) / (x * x - one);
    Real w = Real(2L, bits) / ((one - x * x) * dp * dp);
    rule.nodes[n - 1 - i] = x.rounded(precision_bits);
    rule.nodes[i] = (-x).rounded(precision_bits);
    rule.weights[i] = w.rounded(precision_bits);
    rule.weights[n - 1 - i] = w.rounded(precision_bits);
  }
  if (n % 2 == 1) rule.nodes[n / 2] = Real(precision_bits);
  return rule;
}

Real panel_sum(const RealFn& fn, const GaussLegendreRule& rule, const Real& lo, const Real& hi) {
  const long bits = rule.precision_bits;
  Real half = (hi - lo).scaled(-1);
  Real mid = (hi + lo).scaled(-1);
  Real sum(bits);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * fn(mid + half * rule.nodes[i]);
  return sum * half;
}

Real composite(const RealFn& fn, const GaussLegendreRule& rule, const std::vector<Real>& cuts, unsigned panels) {
  Real total(rule.precision_bits);
  const Real count(static_cast<long>(panels), rule.precision_bits);
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    Real width = (cuts[s + 1] - cuts[s]) / count;
    for (unsigned p = 0; p < panels; ++p) {
      Real a = cuts[s] + width * Real(static_cast<long>(p), rule.precision_bits);
      Real b = p + 1 == panels ? cuts[s + 1] : a + width;
      total += panel_sum(fn, rule, a, b);
    }
  }
  return total;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(unsigned nodes, long precision_bits) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, long>, std::unique_ptr<GaussLegendreRule>> cache;
  if (nodes < 1) throw DomainError("Gauss-Legendre rule needs at least one node");
  std::lock_guard lock(mutex);
  auto& slot = cache[{nodes, precision_bits}];
  if (!slot) slot = std::make_unique<GaussLegendreRule>(build_rule(nodes, precision_bits));
  return *slot;
}

QuadratureResult integrate(const RealFn& fn, const Rational& lo, const Rational& hi, const QuadratureSpec& spec,
                           std::span<const Rational> breakpoints) {
  const long bits = spec.working_bits;
  if (lo == hi) return {Real(bits), Real(bits), 0};
  if (hi < lo) {
    QuadratureResult r = integrate(fn, hi, lo, spec, breakpoints);
    return {-r.value, r.error_estimate, r.panels};
  }

  std::vector<Rational> cut_points{lo};
  for (const Rational& b : breakpoints) {
    if (b > lo && b < hi) cut_points.push_back(b);
  }
  cut_points.push_back(hi);
  std::sort(cut_points.begin(), cut_points.end());
  cut_points.erase(std::unique(cut_points.begin(), cut_points.end()), cut_points.end());
  std::vector<Real> cuts;
  cuts.reserve(cut_points.size());
  for (const Rational& c : cut_points) cuts.emplace_back(c, bits);

  const GaussLegendreRule& rule = gauss_legendre(spec.nodes, bits);
  const Real rel(spec.rel_tol, bits);
  const Real absolute(spec.abs_tol, bits);

  unsigned panels = std::max(1U, spec.initial_panels);
  Real previous = composite(fn, rule, cuts, panels);
  Real previous_diff(bits);
  bool have_diff = false;
  while (panels <= spec.max_panels / 2) {
    panels *= 2;
    Real current = composite(fn, rule, cuts, panels);
    Real diff = abs(current - previous);
    Real tolerance = rel * abs(current);
    if (tolerance < absolute) tolerance = absolute;
    if (have_diff && diff <= tolerance && previous_diff <= tolerance) return {current, diff, panels};
    previous_diff = diff;
    have_diff = true;
    previous = std::move(current);
  }
  throw QuadratureNonConvergent("quadrature did not settle within " + std::to_string(spec.max_panels) +
                                " panels per segment (last change " + previous_diff.to_decimal(6) + ")");
}

}  // namespace ndf
