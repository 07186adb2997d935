#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "ndfourier/errors.hpp"
#include "ndfourier/sawtooth.hpp"
#include "oracles.hpp"

using namespace ndf;

TEST_CASE("lowercase sawtooth") {
  CHECK(sawtooth_lower(make_rational(1, 4)) == make_rational(1, 4));
  CHECK(sawtooth_lower(make_rational(-1, 2)) == make_rational(-1, 2));
  CHECK(sawtooth_lower(make_rational(1, 2)) == make_rational(-1, 2));
  CHECK(sawtooth_lower(make_rational(7, 4)) == make_rational(-1, 4));
  CHECK(sawtooth_lower(3, 2) == -1);
  CHECK(sawtooth_lower(Real(make_rational(7, 4), 64)).to_rational() == make_rational(-1, 4));
  auto ctx = make_context(ArithmeticContext::identity());
  NDFunction saw = sawtooth_nd(ctx);
  std::vector<Rational> br = saw.breakpoints(-2, 2);
  CHECK(br == std::vector<Rational>{make_rational(-3, 2), make_rational(-1, 2), make_rational(1, 2),
                                    make_rational(3, 2)});
  CHECK_THROWS_AS(sawtooth_nd(ctx, 0), DomainError);
}

TEST_CASE("figure datasets") {
  auto ctx = make_context(ArithmeticContext::ternary_line(Branch::Minus));
  FigureRequest r;
  r.kind = FigureKind::Fig1Upper;
  r.samples = 8;
  auto pts = figure_data(r, ctx);
  REQUIRE(pts.size() == 8);
  CHECK(pts[0].x == -2);
  CHECK(pts[5].x == make_rational(1, 2));
  CHECK(pts[5].y == make_rational(1, 3));
  CHECK(pts[0].coordinates == CoordinateSystem::Map);

  r.kind = FigureKind::Fig1Lower;
  pts = figure_data(r, ctx);
  CHECK(pts[6].x == 1);
  CHECK(pts[6].y == 2);

  r.kind = FigureKind::Fig2Lower;
  r.samples = 4;
  pts = figure_data(r, ctx);
  CHECK(pts[1].x == make_rational(-2, 9));  // f^-1(-1/4)
  CHECK(pts[1].y == make_rational(-2, 9));
  CHECK(pts[1].coordinates == CoordinateSystem::Upper);

  r.kind = FigureKind::Fig2Upper;
  pts = figure_data(r, ctx);
  CHECK(pts[1].y == make_rational(-1, 4));

  r.kind = FigureKind::Fig3Terms;
  CHECK_THROWS_AS(figure_data(r, ctx), DomainError);
  CHECK_THROWS_AS(uniform_samples(0, 1, 1), DomainError);
  CHECK_THROWS_AS(uniform_samples(1, 0, 4), DomainError);
}

TEST_CASE("sawtooth values") {
  auto ctx = make_context(ArithmeticContext::ternary_line(Branch::Minus));
  NDFunction saw = sawtooth_nd(ctx);
  CHECK(saw(zero_prime(ctx)) == zero_prime(ctx));
  // 1/4 = 0.00111... on the minus branch, giving 0.00(2) in base 3 = 1/9;
  // 1/3 = 0.(01) in base 2 goes to 0.(02) in base 3 = 1/4.
  NDNumber quarter(ctx, make_rational(1, 4));
  CHECK(saw(quarter).upper() == make_rational(1, 9));
  CHECK(saw(quarter).upper() == oracle::double_fraction(make_rational(1, 4), 3, true));
  CHECK(ctx->inverse(sawtooth_lower(make_rational(1, 3))) == make_rational(1, 4));
  NDNumber third(ctx, make_rational(1, 3));
  CHECK(std::fabs(Rational(saw(third).upper() - make_rational(1, 4)).get_d()) < 1e-30);
}

TEST_CASE("figure 2 is monotone on a period") {
  for (const char* name : {"ternary-line:minus", "quaternary:plus", "middle-third"}) {
    auto ctx = make_context(ArithmeticContext::parse(name));
    for (FigureKind kind : {FigureKind::Fig2Lower, FigureKind::Fig2Upper}) {
      FigureRequest r;
      r.kind = kind;
      r.samples = 97;
      auto pts = figure_data(r, ctx);
      for (std::size_t i = 1; i < pts.size(); ++i) {
        CHECK(pts[i - 1].x < pts[i].x);
        CHECK(pts[i - 1].y <= pts[i].y);
      }
    }
  }
}

TEST_CASE("partial sums of the sawtooth") {
  auto ctx = make_context(ArithmeticContext::ternary_line(Branch::Minus));
  FourierSeries series = analyze(sawtooth_nd(ctx), 1, 30);

  FigureRequest r;
  r.kind = FigureKind::Fig3Terms;
  r.terms = 5;
  r.samples = 40;
  auto pts = figure_data(r, ctx, &series);
  REQUIRE(pts.size() == 40);
  // Sample 20 sits at x = 0.
  CHECK(pts[20].x == 0);
  CHECK(std::fabs(pts[20].y.get_d()) < 1e-10);
  // The upper curve is the image of the lowercase partial sum, point by point.
  auto xs = uniform_samples(make_rational(-1, 2), make_rational(1, 2), 40);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    NDNumber value = reconstruct(series, NDNumber(ctx, xs[i]), 5);
    CHECK(pts[i].x == ctx->inverse(xs[i]));
    CHECK(pts[i].y == ctx->inverse(value.lower()));
    CHECK(pts[i].coordinates == CoordinateSystem::Upper);
  }

  // Gibbs: just left of the jump the 30-term sum exceeds the sawtooth by
  // about 0.0895 of the unit jump, i.e. 17.9 % of the half jump. The peak
  // value itself stays near 0.573 at this order.
  double excess = 0, peak = 0;
  for (int i = 1; i <= 200; ++i) {
    Rational x = make_rational(1, 2) - make_rational(i, 4000);
    double s = reconstruct(series, NDNumber(ctx, x), 30).lower().get_d();
    CHECK(s == doctest::Approx(oracle::sawtooth_partial_sum(x.get_d(), 30)).epsilon(1e-12));
    excess = std::max(excess, s - x.get_d());
    peak = std::max(peak, s);
  }
  CHECK(excess > 0.5 * 0.17);
  CHECK(excess == doctest::Approx(0.0895).epsilon(2e-3));
  CHECK(peak == doctest::Approx(0.5733).epsilon(1e-3));
}
