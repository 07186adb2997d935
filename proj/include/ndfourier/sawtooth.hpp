#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ndfourier/fourier.hpp"

namespace ndf {

// a(x) = x on [-T/2, T/2), extended T-periodically. Unit jump (for T = 1) at
// every half-period point; odd about the origin away from the jumps.
Rational sawtooth_lower(const Rational& x, const Rational& period_lower = 1);
Real sawtooth_lower(const Real& x, const Rational& period_lower = 1);

// A = f^-1 o a o f, with the jump points registered as quadrature breakpoints.
NDFunction sawtooth_nd(const ContextPtr& ctx, const Rational& period_lower = 1);

enum class CoordinateSystem {
  Lower,  // (x, a(x))
  Upper,  // (X, A(X)) = (f^-1(x), f^-1(a(x)))
  Map,    // (x, f^-1(x))
};

std::string to_string(CoordinateSystem c);

enum class FigureKind {
  Fig1Upper,  // f^-1 of the ternary Cantor line
  Fig1Lower,  // f_+^-1 of the quaternary Cantor set
  Fig2Upper,  // the lowercase sawtooth
  Fig2Lower,  // the Cantorian sawtooth in upper coordinates
  Fig3Terms,  // partial Fourier sums of the Cantorian sawtooth, upper coordinates
};

struct FigurePoint {
  Rational x;
  Rational y;
  CoordinateSystem coordinates;
};

struct FigureRequest {
  FigureKind kind = FigureKind::Fig2Lower;
  unsigned samples = 512;
  unsigned terms = 5;  // Fig3Terms only
  Rational period_lower = 1;  // ignored for Fig3Terms, which uses the series' period
  // Sampling window in lower coordinates, half-open. Unset means one period
  // centred on 0 for figures 2-3 and [-2, 2) for figure 1.
  std::optional<Rational> x_min;
  std::optional<Rational> x_max;
};

// Samples are uniform in lower coordinates and mapped through f^-1. `ctx` is
// the arithmetic for figures 2-3 (figure 1 fixes its own bijection but uses
// ctx's precision); `series` must be given for Fig3Terms.
std::vector<FigurePoint> figure_data(const FigureRequest& request, const ContextPtr& ctx,
                                     const FourierSeries* series = nullptr);

// Lower-coordinate sample points x_min + i (x_max - x_min) / samples.
std::vector<Rational> uniform_samples(const Rational& x_min, const Rational& x_max, unsigned samples);

}  // namespace ndf
