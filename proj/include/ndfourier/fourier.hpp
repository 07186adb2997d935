#pragma once

#include <vector>

#include "ndfourier/calculus.hpp"

namespace ndf {

enum class BasisKind { Cos, Sin };

// C_n (n >= 0) or S_n (n >= 1). S_0 vanishes identically and is not a basis
// element.
struct BasisIndex {
  BasisKind kind;
  unsigned n;
};

// C_n = f^-1 o c_n o f with
//   c_0(y) = sqrt(1/T),  c_n(y) = sqrt(2/T) cos(2 n pi y / T),
//   s_n(y) = sqrt(2/T) sin(2 n pi y / T),
// where T is the lowercase period f(T).
NDFunction basis_fn(BasisIndex idx, const Rational& period_lower, const ContextPtr& ctx);

// Lowercase basis value at x, at the precision of x.
Real basis_lower(BasisIndex idx, const Rational& period_lower, const Real& x);

// <A|B> = f^-1(Re <a|b>) (+) i' f^-1(Im <a|b>), <a|b> = integral of conj(a) b
// over [-T/2, T/2].
NDComplex scalar_product(const NDFunction& a, const NDFunction& b, const Rational& period_lower,
                         const QuadratureSpec& spec = {});

// Coefficients <C_n|A>, <S_n|A> in lower coordinates.
struct FourierSeries {
  ContextPtr context;
  Rational period_lower;
  std::vector<NDNumber> cos_coeffs;  // n = 0 .. n_max
  std::vector<NDNumber> sin_coeffs;  // n = 1 .. n_max, stored at n - 1

  unsigned n_max() const { return cos_coeffs.empty() ? 0U : static_cast<unsigned>(cos_coeffs.size() - 1); }
  const NDNumber& cos_coeff(unsigned n) const { return cos_coeffs.at(n); }
  const NDNumber& sin_coeff(unsigned n) const { return sin_coeffs.at(n - 1); }
};

// Real-valued A only. Coefficient integrals are independent and may be spread
// over `threads` workers (0 picks the hardware concurrency); the result does
// not depend on the thread count.
FourierSeries analyze(const NDFunction& a, const Rational& period_lower, unsigned n_max,
                      const QuadratureSpec& spec = {}, unsigned threads = 0);

// (+)_{n=0}^{terms} C_n(X) (.) <C_n|A>  (+)  (+)_{n=1}^{terms} S_n(X) (.) <S_n|A>
NDNumber reconstruct(const FourierSeries& series, const NDNumber& x, unsigned terms);

struct ParsevalSides {
  NDComplex lhs;  // <A|B> by direct quadrature
  NDComplex rhs;  // (+)_n (<A|C_n> (.) <C_n|B> (+) <A|S_n> (.) <S_n|B>)
};

ParsevalSides parseval_check(const NDFunction& a, const NDFunction& b, const FourierSeries& series_a,
                             const FourierSeries& series_b, const QuadratureSpec& spec = {});

// A^(K) = integral over [(-)T(/)2', T(/)2'] of A (.) Exp((-)i' K (.) X).
NDComplex fourier_transform(const NDFunction& a, const NDNumber& k, const Rational& period_lower,
                            const QuadratureSpec& spec = {});

// n' = f^-1(n) labelling the Laplacian eigenvalues. Defined for the identity,
// ternary-line, quaternary and middle-third contexts.
Rational spectrum_n_prime(const ContextPtr& ctx, unsigned long n);

}  // namespace ndf
