#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ndfourier/calculus.hpp"
#include "ndfourier/quadrature.hpp"

namespace ndf {

struct SuiteResult {
  std::string name;
  bool passed = false;
  unsigned cases = 0;
  double max_deviation = 0.0;  // largest lower-coordinate deviation observed
  double tolerance = 0.0;
  std::string note;
};

struct SelftestOptions {
  unsigned random_cases = 100;
  unsigned function_pairs = 10;
  unsigned max_harmonic = 8;
  std::uint64_t seed = 20240917;
  QuadratureSpec quadrature{};
};

// Property suites: field laws, negatives, trig identities, FTC,
// orthonormality, Parseval and the scalar-product laws. Tolerances are fixed
// (they do not scale with the context precision), so a low-precision context
// fails the transcendental suites.
std::vector<SuiteResult> run_selftest(const ContextPtr& ctx, const SelftestOptions& options = {});

// Small random rationals p/q, |p| <= max_num, 1 <= q <= max_den.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, long max_num = 60, long max_den = 16)
      : rng_(seed), num_(-max_num, max_num), den_(1, max_den) {}

  Rational operator()() { return make_rational(num_(rng_), den_(rng_)); }
  Rational nonzero() {
    for (;;) {
      Rational q = (*this)();
      if (q != 0) return q;
    }
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<long> num_;
  std::uniform_int_distribution<long> den_;
};

// Lower-coordinate values of f^-1 on a few random points: an element of X
// for every built-in context.
NDNumber random_element(const ContextPtr& ctx, RationalSampler& sample);

// A random smooth complex-valued test function
//   re = p x^2 + q sin(k x) + r,  im = s cos(m x) + t x
// with small rational coefficients and integer frequencies.
NDFunction random_test_function(const ContextPtr& ctx, RationalSampler& sample);

// The smooth functions the FTC checks run on.
std::vector<NDFunction> smooth_test_set(const ContextPtr& ctx);

}  // namespace ndf
