#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "ndfourier/exact_digits.hpp"
#include "ndfourier/rational.hpp"

namespace ndf {

enum class BijectionKind { Identity, Benioff, Fechner, TernaryLine, QuaternaryCantor, MiddleThird };

inline constexpr long kDefaultPrecisionBits = 128;

// A bijection f: X -> R together with the precision used wherever a value of
// f or f^-1 is transcendental. Contexts are immutable and compare by value.
//
//   Identity          f(X) = X
//   Benioff(p)        f(X) = p X
//   Fechner(a, b)     f(X) = a ln X + b, X > 0
//   TernaryLine(br)   translated ternary Cantor cells, f(X + k) = f(X) + k
//   Quaternary(br)    digit doubling into base 4 over all of R, odd
//   MiddleThird       digit doubling into base 3 over all of R, odd, Plus branch
class ArithmeticContext {
 public:
  static ArithmeticContext identity(long precision_bits = kDefaultPrecisionBits);
  static ArithmeticContext benioff(const Rational& p, long precision_bits = kDefaultPrecisionBits);
  static ArithmeticContext fechner(const Rational& a, const Rational& b, long precision_bits = kDefaultPrecisionBits);
  static ArithmeticContext ternary_line(Branch branch, long precision_bits = kDefaultPrecisionBits);
  static ArithmeticContext quaternary(Branch branch, long precision_bits = kDefaultPrecisionBits);
  static ArithmeticContext middle_third(long precision_bits = kDefaultPrecisionBits);

  // Accepts the CLI spellings: "identity", "benioff:p=2", "fechner:a=1,b=0",
  // "ternary-line:minus", "quaternary:plus", "middle-third".
  static ArithmeticContext parse(std::string_view spec, long precision_bits = kDefaultPrecisionBits);

  BijectionKind kind() const { return kind_; }
  long precision_bits() const { return precision_bits_; }
  Branch branch() const { return branch_; }
  const Rational& p() const { return p_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  // f: upper coordinate -> lower coordinate.
  Rational forward(const Rational& upper) const;
  // f^-1: lower coordinate -> upper coordinate.
  Rational inverse(const Rational& lower) const;

  // Fechner is the only context whose maps round.
  bool exact() const { return kind_ != BijectionKind::Fechner; }

  // Round-trippable spelling accepted by parse().
  std::string name() const;

  friend bool operator==(const ArithmeticContext& x, const ArithmeticContext& y);

 private:
  ArithmeticContext(BijectionKind kind, long precision_bits);

  BijectionKind kind_;
  long precision_bits_;
  Branch branch_ = Branch::Plus;
  Rational p_ = 1;
  Rational a_ = 1;
  Rational b_ = 0;
};

using ContextPtr = std::shared_ptr<const ArithmeticContext>;

ContextPtr make_context(ArithmeticContext ctx);

// An element X of the set the context is defined on. The lower coordinate
// f(X) is the canonical, exact representation; the upper coordinate X is
// derived on first use and cached.
class NDNumber {
 public:
  NDNumber(ContextPtr ctx, Rational lower);

  static NDNumber from_upper(ContextPtr ctx, const Rational& upper);

  const ContextPtr& context() const { return ctx_; }
  const ArithmeticContext& ctx() const { return *ctx_; }
  const Rational& lower() const { return lower_; }
  const Rational& upper() const;

  // Exact equality of lower coordinates within the same context.
  friend bool operator==(const NDNumber& x, const NDNumber& y);

 private:
  struct UpperCache {
    std::once_flag once;
    std::optional<Rational> value;
  };

  ContextPtr ctx_;
  Rational lower_;
  std::shared_ptr<UpperCache> cache_;
};

bool same_context(const NDNumber& x, const NDNumber& y);

// Throws ContextMismatch unless both operands live in equal contexts.
void require_same_context(const NDNumber& x, const NDNumber& y);

NDNumber add(const NDNumber& x, const NDNumber& y);
NDNumber sub(const NDNumber& x, const NDNumber& y);
NDNumber mul(const NDNumber& x, const NDNumber& y);
NDNumber div(const NDNumber& x, const NDNumber& y);
NDNumber neg(const NDNumber& x);

NDNumber zero_prime(const ContextPtr& ctx);
NDNumber one_prime(const ContextPtr& ctx);

// n' = f^-1(n).
NDNumber nat(const ContextPtr& ctx, long n);
NDNumber nat(const ContextPtr& ctx, const Integer& n);

// X^{n'} = X (.) ... (.) X, n factors.
NDNumber pow_nat(const NDNumber& x, unsigned long n);

// n!' = f^-1(n!).
NDNumber factorial_prime(const ContextPtr& ctx, unsigned long n);

}  // namespace ndf
