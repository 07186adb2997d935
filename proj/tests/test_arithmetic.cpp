#include <thread>

#include "doctest.h"
#include "ndfourier/arithmetic.hpp"
#include "ndfourier/errors.hpp"
#include "ndfourier/real.hpp"
#include "ndfourier/selftest.hpp"

using namespace ndf;

namespace {

std::vector<ContextPtr> builtin_contexts() {
  return {make_context(ArithmeticContext::identity()),
          make_context(ArithmeticContext::benioff(2)),
          make_context(ArithmeticContext::benioff(make_rational(3, 2))),
          make_context(ArithmeticContext::fechner(1, 0)),
          make_context(ArithmeticContext::fechner(2, 1)),
          make_context(ArithmeticContext::ternary_line(Branch::Minus)),
          make_context(ArithmeticContext::ternary_line(Branch::Plus)),
          make_context(ArithmeticContext::quaternary(Branch::Plus)),
          make_context(ArithmeticContext::quaternary(Branch::Minus)),
          make_context(ArithmeticContext::middle_third())};
}

double rel(const Rational& got, const Real& want) {
  Real g(got, want.precision());
  return abs((g - want) / want).to_double();
}

}  // namespace

TEST_CASE("context names round trip through parse") {
  for (const ContextPtr& ctx : builtin_contexts()) {
    CHECK(ArithmeticContext::parse(ctx->name(), ctx->precision_bits()) == *ctx);
  }
  CHECK(ArithmeticContext::parse("ternary-line").branch() == Branch::Minus);
  CHECK(ArithmeticContext::parse("quaternary").branch() == Branch::Plus);
  CHECK(ArithmeticContext::parse("fechner:b=0,a=1") == ArithmeticContext::fechner(1, 0));
  CHECK_THROWS_AS(ArithmeticContext::parse("cantor"), ParseError);
  CHECK_THROWS_AS(ArithmeticContext::parse("benioff:q=2"), ParseError);
  CHECK_THROWS_AS(ArithmeticContext::parse("quaternary:up"), ParseError);
  CHECK_THROWS_AS(ArithmeticContext::benioff(0), DomainError);
  CHECK_THROWS_AS(ArithmeticContext::identity(4), DomainError);
}

TEST_CASE("distinguished elements") {
  auto ben = make_context(ArithmeticContext::benioff(2));
  CHECK(one_prime(ben).upper() == make_rational(1, 2));
  CHECK(zero_prime(ben).upper() == 0);
  auto ben3 = make_context(ArithmeticContext::benioff(make_rational(3, 2)));
  CHECK(one_prime(ben3).upper() == make_rational(2, 3));

  auto quat = make_context(ArithmeticContext::quaternary(Branch::Plus));
  CHECK(one_prime(quat).upper() == 2);
  CHECK(nat(quat, 2).upper() == 8);
  CHECK(add(nat(quat, 1), nat(quat, 1)) == nat(quat, 2));
  CHECK(factorial_prime(quat, 3).upper() == quaternary_inverse(6, Branch::Plus));

  auto id = make_context(ArithmeticContext::identity());
  CHECK(factorial_prime(id, 6).upper() == 720);
  CHECK(pow_nat(NDNumber(id, 3), 4).upper() == 81);
  CHECK(pow_nat(NDNumber(id, 3), 0) == one_prime(id));
}

TEST_CASE("Fechner arithmetic") {
  const long bits = 128;
  auto ctx = make_context(ArithmeticContext::fechner(2, 1, bits));
  // 0' = exp(-b/a), 1' = exp((1-b)/a)
  CHECK(rel(zero_prime(ctx).upper(), exp(Real(make_rational(-1, 2), 200))) < std::ldexp(1.0, -120));
  CHECK(rel(one_prime(ctx).upper(), Real(1, 200)) < std::ldexp(1.0, -120));
  RationalSampler sample(3, 30, 8);
  for (int i = 0; i < 50; ++i) {
    NDNumber x = NDNumber::from_upper(ctx, abs(sample.nonzero()));
    NDNumber m = neg(x);
    CHECK(add(m, x) == zero_prime(ctx));
    // (-)X = exp(-2b/a) / X
    Real want = exp(Real(-1, 200)) / Real(x.upper(), 200);
    CHECK(rel(m.upper(), want) < std::ldexp(1.0, -120));
  }
  CHECK_THROWS_AS(NDNumber::from_upper(ctx, 0), DomainError);
  CHECK_THROWS_AS(NDNumber::from_upper(ctx, -1), DomainError);
}

TEST_CASE("errors") {
  auto a = make_context(ArithmeticContext::identity());
  auto b = make_context(ArithmeticContext::benioff(2));
  CHECK_THROWS_AS(add(one_prime(a), one_prime(b)), ContextMismatch);
  CHECK_THROWS_AS(div(one_prime(a), zero_prime(a)), DivisionByZeroPrime);
  // Equal contexts built separately interoperate.
  auto a2 = make_context(ArithmeticContext::identity());
  CHECK(add(one_prime(a), one_prime(a2)).upper() == 2);
  // Precision is part of the context.
  auto a3 = make_context(ArithmeticContext::identity(64));
  CHECK_THROWS_AS(add(one_prime(a), one_prime(a3)), ContextMismatch);
}

TEST_CASE("field laws hold exactly in lower coordinates") {
  for (const ContextPtr& ctx : builtin_contexts()) {
    RationalSampler sample(42);
    for (int i = 0; i < 50; ++i) {
      NDNumber x(ctx, sample()), y(ctx, sample()), z(ctx, sample());
      CHECK(mul(x, add(y, z)) == add(mul(x, y), mul(x, z)));
      CHECK(sub(add(x, y), y) == x);
      if (!(y == zero_prime(ctx))) CHECK(mul(div(x, y), y) == x);
    }
  }
}

TEST_CASE("upper coordinate is computed once and shared across threads") {
  auto ctx = make_context(ArithmeticContext::ternary_line(Branch::Minus));
  NDNumber x(ctx, make_rational(7, 16));
  std::vector<Rational> seen(8);
  std::vector<std::thread> pool;
  for (int t = 0; t < 8; ++t) pool.emplace_back([&, t] { seen[t] = x.upper(); });
  for (auto& th : pool) th.join();
  for (const Rational& s : seen) CHECK(s == seen.front());
  CHECK(ctx->forward(seen.front()) == make_rational(7, 16));
}
