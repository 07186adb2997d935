#include "ndfourier/arithmetic.hpp"

#include <utility>
#include <vector>

#include "ndfourier/errors.hpp"
#include "ndfourier/real.hpp"

namespace ndf {

ArithmeticContext::ArithmeticContext(BijectionKind kind, long precision_bits)
    : kind_(kind), precision_bits_(precision_bits) {
  if (precision_bits < 8) throw DomainError("precision_bits must be at least 8");
}

ArithmeticContext ArithmeticContext::identity(long precision_bits) {
  return ArithmeticContext(BijectionKind::Identity, precision_bits);
}

ArithmeticContext ArithmeticContext::benioff(const Rational& p, long precision_bits) {
  if (p == 0) throw DomainError("Benioff scaling needs p != 0");
  ArithmeticContext ctx(BijectionKind::Benioff, precision_bits);
  ctx.p_ = p;
  return ctx;
}

ArithmeticContext ArithmeticContext::fechner(const Rational& a, const Rational& b, long precision_bits) {
  if (a == 0) throw DomainError("Fechner map needs a != 0");
  ArithmeticContext ctx(BijectionKind::Fechner, precision_bits);
  ctx.a_ = a;
  ctx.b_ = b;
  return ctx;
}

ArithmeticContext ArithmeticContext::ternary_line(Branch branch, long precision_bits) {
  ArithmeticContext ctx(BijectionKind::TernaryLine, precision_bits);
  ctx.branch_ = branch;
  return ctx;
}

ArithmeticContext ArithmeticContext::quaternary(Branch branch, long precision_bits) {
  ArithmeticContext ctx(BijectionKind::QuaternaryCantor, precision_bits);
  ctx.branch_ = branch;
  return ctx;
}

ArithmeticContext ArithmeticContext::middle_third(long precision_bits) {
  return ArithmeticContext(BijectionKind::MiddleThird, precision_bits);
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) return out;
    s.remove_prefix(pos + 1);
  }
}

Branch parse_branch(std::string_view s, Branch fallback) {
  if (s.empty()) return fallback;
  if (s == "minus" || s == "-") return Branch::Minus;
  if (s == "plus" || s == "+") return Branch::Plus;
  throw ParseError("unknown branch '" + std::string(s) + "' (expected minus or plus)");
}

}  // namespace

ArithmeticContext ArithmeticContext::parse(std::string_view spec, long precision_bits) {
  auto colon = spec.find(':');
  std::string_view kind = spec.substr(0, colon);
  std::string_view args = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

  auto named_args = [&](std::initializer_list<std::pair<std::string_view, Rational*>> slots) {
    if (args.empty()) return;
    for (std::string_view item : split(args, ',')) {
      auto eq = item.find('=');
      if (eq == std::string_view::npos) throw ParseError("expected name=value in '" + std::string(spec) + "'");
      std::string_view key = item.substr(0, eq);
      bool matched = false;
      for (auto& [name, slot] : slots) {
        if (name == key) {
          *slot = parse_rational(item.substr(eq + 1));
          matched = true;
        }
      }
      if (!matched) throw ParseError("unknown parameter '" + std::string(key) + "' in '" + std::string(spec) + "'");
    }
  };

  if (kind == "identity") {
    if (!args.empty()) throw ParseError("identity takes no parameters");
    return identity(precision_bits);
  }
  if (kind == "benioff") {
    Rational p = 1;
    named_args({{"p", &p}});
    return benioff(p, precision_bits);
  }
  if (kind == "fechner") {
    Rational a = 1;
    Rational b = 0;
    named_args({{"a", &a}, {"b", &b}});
    return fechner(a, b, precision_bits);
  }
  if (kind == "ternary-line") return ternary_line(parse_branch(args, Branch::Minus), precision_bits);
  if (kind == "quaternary") return quaternary(parse_branch(args, Branch::Plus), precision_bits);
  if (kind == "middle-third") {
    if (!args.empty()) throw ParseError("middle-third takes no parameters");
    return middle_third(precision_bits);
  }
  throw ParseError("unknown bijection '" + std::string(spec) + "'");
}

Rational ArithmeticContext::forward(const Rational& upper) const {
  switch (kind_) {
    case BijectionKind::Identity:
      return upper;
    case BijectionKind::Benioff:
      return p_ * upper;
    case BijectionKind::Fechner:
      if (sgn(upper) <= 0) throw DomainError("Fechner map is defined on X > 0, got " + to_string(upper));
      return a_ * log_rational(upper, precision_bits_) + b_;
    case BijectionKind::TernaryLine:
      return ternary_line_forward(upper, branch_);
    case BijectionKind::QuaternaryCantor:
      return quaternary_forward(upper, branch_);
    case BijectionKind::MiddleThird:
      return scaled_line_forward(upper, 3, Branch::Plus);
  }
  throw DomainError("unreachable bijection kind");
}

Rational ArithmeticContext::inverse(const Rational& lower) const {
  switch (kind_) {
    case BijectionKind::Identity:
      return lower;
    case BijectionKind::Benioff:
      return lower / p_;
    case BijectionKind::Fechner:
      return exp_rational((lower - b_) / a_, precision_bits_);
    case BijectionKind::TernaryLine:
      return ternary_line_inverse(lower, branch_);
    case BijectionKind::QuaternaryCantor:
      return quaternary_inverse(lower, branch_);
    case BijectionKind::MiddleThird:
      return scaled_line_inverse(lower, 3, Branch::Plus);
  }
  throw DomainError("unreachable bijection kind");
}

std::string ArithmeticContext::name() const {
  switch (kind_) {
    case BijectionKind::Identity:
      return "identity";
    case BijectionKind::Benioff:
      return "benioff:p=" + to_string(p_);
    case BijectionKind::Fechner:
      return "fechner:a=" + to_string(a_) + ",b=" + to_string(b_);
    case BijectionKind::TernaryLine:
      return "ternary-line:" + to_string(branch_);
    case BijectionKind::QuaternaryCantor:
      return "quaternary:" + to_string(branch_);
    case BijectionKind::MiddleThird:
      return "middle-third";
  }
  return "?";
}

bool operator==(const ArithmeticContext& x, const ArithmeticContext& y) {
  return x.kind_ == y.kind_ && x.precision_bits_ == y.precision_bits_ && x.branch_ == y.branch_ && x.p_ == y.p_ &&
         x.a_ == y.a_ && x.b_ == y.b_;
}

ContextPtr make_context(ArithmeticContext ctx) { return std::make_shared<const ArithmeticContext>(std::move(ctx)); }

NDNumber::NDNumber(ContextPtr ctx, Rational lower)
    : ctx_(std::move(ctx)), lower_(std::move(lower)), cache_(std::make_shared<UpperCache>()) {
  if (!ctx_) throw DomainError("NDNumber needs a context");
}

NDNumber NDNumber::from_upper(ContextPtr ctx, const Rational& upper) {
  NDNumber out(ctx, ctx->forward(upper));
  std::call_once(out.cache_->once, [&] { out.cache_->value = upper; });
  return out;
}

const Rational& NDNumber::upper() const {
  std::call_once(cache_->once, [this] { cache_->value = ctx_->inverse(lower_); });
  return *cache_->value;
}

bool same_context(const NDNumber& x, const NDNumber& y) {
  return x.context() == y.context() || x.ctx() == y.ctx();
}

void require_same_context(const NDNumber& x, const NDNumber& y) {
  if (!same_context(x, y)) {
    throw ContextMismatch("operands live in different arithmetics: " + x.ctx().name() + " vs " + y.ctx().name());
  }
}

bool operator==(const NDNumber& x, const NDNumber& y) { return same_context(x, y) && x.lower_ == y.lower_; }

NDNumber add(const NDNumber& x, const NDNumber& y) {
  require_same_context(x, y);
  return NDNumber(x.context(), x.lower() + y.lower());
}

NDNumber sub(const NDNumber& x, const NDNumber& y) {
  require_same_context(x, y);
  return NDNumber(x.context(), x.lower() - y.lower());
}

NDNumber mul(const NDNumber& x, const NDNumber& y) {
  require_same_context(x, y);
  return NDNumber(x.context(), x.lower() * y.lower());
}

NDNumber div(const NDNumber& x, const NDNumber& y) {
  require_same_context(x, y);
  if (y.lower() == 0) throw DivisionByZeroPrime("division by 0' in " + x.ctx().name());
  return NDNumber(x.context(), x.lower() / y.lower());
}

NDNumber neg(const NDNumber& x) { return NDNumber(x.context(), -x.lower()); }

NDNumber zero_prime(const ContextPtr& ctx) { return NDNumber(ctx, 0); }

NDNumber one_prime(const ContextPtr& ctx) { return NDNumber(ctx, 1); }

NDNumber nat(const ContextPtr& ctx, long n) { return NDNumber(ctx, Rational(n)); }

NDNumber nat(const ContextPtr& ctx, const Integer& n) { return NDNumber(ctx, Rational(n)); }

NDNumber pow_nat(const NDNumber& x, unsigned long n) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), x.lower().get_num_mpz_t(), n);
  mpz_pow_ui(out.get_den_mpz_t(), x.lower().get_den_mpz_t(), n);
  return NDNumber(x.context(), out);
}

NDNumber factorial_prime(const ContextPtr& ctx, unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return NDNumber(ctx, Rational(f));
}

}  // namespace ndf
