#include <algorithm>
#include <random>

#include "doctest.h"
#include "ndfourier/errors.hpp"
#include "ndfourier/exact_digits.hpp"
#include "oracles.hpp"

using namespace ndf;

namespace {

std::vector<Rational> unit_samples(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> den_pick(1, 200);
  std::vector<Rational> out;
  for (int i = 0; i < count; ++i) {
    long den = den_pick(rng);
    // Every fourth sample dyadic.
    if (i % 4 == 0) den = 1L << (den % 12);
    std::uniform_int_distribution<long> num_pick(0, den - 1);
    out.push_back(make_rational(num_pick(rng), den));
  }
  return out;
}

}  // namespace

TEST_CASE("to_digits agrees with long division") {
  for (int base : {2, 3, 4, 7, 10, 16}) {
    for (const Rational& q : unit_samples(11 + base, 200)) {
      RepeatingDigits d = to_digits(q, base);
      oracle::Expansion e = oracle::long_division(q, base);
      CHECK(d.prefix == e.prefix);
      CHECK(d.tail == e.tail);
      CHECK(d.integer_part.empty());
    }
  }
}

TEST_CASE("to_digits / from_digits round trip with sign and integer part") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-5000, 5000), den(1, 97);
  for (int i = 0; i < 500; ++i) {
    Rational q = make_rational(num(rng), den(rng));
    for (int base : {2, 3, 4, 10}) {
      RepeatingDigits d = to_digits(q, base);
      CHECK(from_digits(d) == q);
      CHECK(from_digits(repeating_form(d)) == q);
    }
  }
}

TEST_CASE("digit strings") {
  CHECK(to_digits(make_rational(1, 3), 2).to_string() == "+ 0.(01)_2");
  CHECK(to_digits(make_rational(1, 3), 3).to_string() == "+ 0.1_3");
  RepeatingDigits half = repeating_form(to_digits(make_rational(1, 2), 2));
  CHECK(half.prefix == std::vector<int>{0});
  CHECK(half.tail == std::vector<int>{1});
  CHECK(to_digits(0, 5).is_zero());
}

TEST_CASE("long periods are refused") {
  // ord of 3 modulo 2^40 is 2^38.
  CHECK_THROWS_AS(to_digits(pow2(-40), 3), std::length_error);
  CHECK_THROWS_AS(to_digits(make_rational(1, 3), 1), DomainError);
}

TEST_CASE("digit doubling matches the long-division oracle") {
  for (int base : {3, 4}) {
    for (const Rational& y : unit_samples(101 + base, 300)) {
      CHECK(double_digits(y, base, Branch::Minus) == oracle::double_fraction(y, base, true));
      CHECK(double_digits(y, base, Branch::Plus) == oracle::double_fraction(y, base, false));
    }
  }
  CHECK(double_digits(make_rational(1, 2), 3, Branch::Minus) == make_rational(1, 3));
  CHECK(double_digits(make_rational(1, 2), 3, Branch::Plus) == make_rational(2, 3));
  CHECK(double_digits(1, 4, Branch::Plus) == 2);
  CHECK(double_digits(1, 4, Branch::Minus) == make_rational(2, 3));
  CHECK_THROWS_AS(double_digits(1, 3, Branch::Plus), DomainError);
  CHECK_THROWS_AS(double_digits(-1, 4, Branch::Plus), DomainError);
}

TEST_CASE("branches are the min and max images and differ only at dyadics") {
  for (int base : {3, 4}) {
    for (const Rational& y : unit_samples(7 * base, 300)) {
      Rational lo = double_digits(y, base, Branch::Minus);
      Rational hi = double_digits(y, base, Branch::Plus);
      CHECK(lo <= hi);
      CHECK((lo == hi) == (y == 0 || !is_dyadic(y)));
    }
  }
}

TEST_CASE("halving inverts doubling on both branches") {
  for (int base : {3, 4}) {
    for (const Rational& y : unit_samples(3 * base, 300)) {
      CHECK(halve_digits(double_digits(y, base, Branch::Minus), base) == y);
      CHECK(halve_digits(double_digits(y, base, Branch::Plus), base) == y);
    }
  }
  CHECK_THROWS_AS(halve_digits(make_rational(1, 2), 3), NotInCantorSet);
  CHECK_THROWS_AS(halve_digits(make_rational(1, 4), 4), NotInCantorSet);
}

TEST_CASE("digit doubling is strictly increasing on each branch") {
  for (int base : {3, 4}) {
    std::vector<Rational> ys = unit_samples(17 * base, 300);
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    for (Branch br : {Branch::Minus, Branch::Plus}) {
      for (std::size_t i = 1; i < ys.size(); ++i) {
        CHECK(double_digits(ys[i - 1], base, br) < double_digits(ys[i], base, br));
      }
    }
  }
}

TEST_CASE("ternary Cantor line") {
  for (long k = -3; k <= 3; ++k) {
    CHECK(ternary_line_inverse(k, Branch::Minus) == k);
    CHECK(ternary_line_inverse(k, Branch::Plus) == k);
  }
  CHECK(ternary_line_inverse(make_rational(1, 2), Branch::Minus) == make_rational(1, 3));
  CHECK(ternary_line_inverse(make_rational(1, 2), Branch::Plus) == make_rational(2, 3));
  CHECK(ternary_line_inverse(make_rational(-1, 2), Branch::Minus) == make_rational(-2, 3));

  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> num(-4000, 4000), den(1, 64);
  for (int i = 0; i < 300; ++i) {
    Rational x = make_rational(num(rng), den(rng));
    for (Branch br : {Branch::Minus, Branch::Plus}) {
      Rational up = ternary_line_inverse(x, br);
      CHECK(ternary_line_forward(up, br) == x);
      // Translation by whole cells.
      CHECK(ternary_line_inverse(x + 5, br) == up + 5);
    }
  }
  CHECK_THROWS_AS(ternary_line_forward(make_rational(1, 2), Branch::Minus), NotInCantorSet);
}

TEST_CASE("forward maps respect the selected branch") {
  // 1/3 = 0.1_3 = 0.0(2)_3 is g_-(1/2); it is not in the Plus image.
  CHECK(ternary_line_forward(make_rational(1, 3), Branch::Minus) == make_rational(1, 2));
  CHECK_THROWS_AS(ternary_line_forward(make_rational(1, 3), Branch::Plus), NotInCantorSet);
  CHECK(ternary_line_forward(make_rational(2, 3), Branch::Plus) == make_rational(1, 2));
  CHECK_THROWS_AS(ternary_line_forward(make_rational(2, 3), Branch::Minus), NotInCantorSet);
}

TEST_CASE("quaternary Cantor set over R") {
  CHECK(quaternary_inverse(1, Branch::Plus) == 2);
  CHECK(quaternary_inverse(1, Branch::Minus) == make_rational(2, 3));
  CHECK(quaternary_inverse(3, Branch::Plus) == 10);
  CHECK(quaternary_inverse(0, Branch::Plus) == 0);
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> num(-3000, 3000), den(1, 40);
  for (int i = 0; i < 300; ++i) {
    Rational x = make_rational(num(rng), den(rng));
    for (Branch br : {Branch::Minus, Branch::Plus}) {
      Rational up = quaternary_inverse(x, br);
      CHECK(quaternary_forward(up, br) == x);
      CHECK(quaternary_inverse(-x, br) == -up);
      CHECK(scaled_line_inverse(x, 4, br) == up);
    }
  }
}

TEST_CASE("middle-third line over R") {
  CHECK(scaled_line_inverse(1, 3, Branch::Plus) == 2);
  CHECK(scaled_line_inverse(2, 3, Branch::Plus) == 6);
  CHECK(scaled_line_inverse(3, 3, Branch::Plus) == 8);
  CHECK(scaled_line_inverse(make_rational(1, 2), 3, Branch::Plus) == make_rational(2, 3));
  CHECK(scaled_line_forward(Rational(-8), 3, Branch::Plus) == -3);
  CHECK_THROWS_AS(scaled_line_forward(1, 3, Branch::Plus), NotInCantorSet);
  CHECK_THROWS_AS(scaled_line_inverse(1, 2, Branch::Plus), DomainError);
}
