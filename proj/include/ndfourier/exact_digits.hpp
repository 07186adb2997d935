#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ndfourier/rational.hpp"

namespace ndf {

// Selects which image a dyadic rational takes under the digit-doubling maps.
// Minus reads the dyadic input in its repeating-ones binary form and gives
// the smaller image; Plus reads the terminating form and gives the larger.
enum class Branch { Minus, Plus };

std::string to_string(Branch b);

// Eventually periodic expansion  sign * (integer_part . prefix (tail)) in
// `base`. Digits are stored most-significant first.
//
// Values produced by to_digits() are canonical: a terminating expansion has
// an empty tail, the tail is never all (base-1), and prefix/tail are the
// shortest possible. The dual (repeating) form built by repeating_form() is
// the one deliberate exception.
struct RepeatingDigits {
  bool negative = false;
  int base = 10;
  std::vector<int> integer_part;
  std::vector<int> prefix;
  std::vector<int> tail;

  bool terminating() const { return tail.empty(); }
  bool is_zero() const;

  // "s iii.ppp(ttt)_b", e.g. "+ 0.0(2)_3".
  std::string to_string() const;

  friend bool operator==(const RepeatingDigits&, const RepeatingDigits&) = default;
};

// Periods longer than this are refused with std::length_error; rationals with
// large denominators coprime to the base can have astronomically long tails.
inline constexpr std::size_t kMaxPeriod = std::size_t{1} << 22;

RepeatingDigits to_digits(const Rational& q, int base, std::size_t max_period = kMaxPeriod);
Rational from_digits(const RepeatingDigits& d);

// The other expansion of a value with a terminating expansion: the last
// nonzero digit is decremented and an all-(base-1) tail appended. Returns the
// input unchanged for zero and for non-terminating expansions (those have a
// single expansion).
RepeatingDigits repeating_form(const RepeatingDigits& d);

// Maps y >= 0 to the number whose `target_base` digits are twice the binary
// digits of y. Base 3 requires y in [0, 1).
Rational double_digits(const Rational& y, int target_base, Branch branch);

// Inverse of double_digits, accepting either expansion of x. Throws
// NotInCantorSet when neither expansion consists of the digits 0 and 2 only.
Rational halve_digits(const Rational& x, int source_base);

// Cantor line built from translated copies of the ternary unit cell:
// f(X + k) = f(X) + k. forward is f (upper -> lower), inverse is g = f^-1.
Rational ternary_line_forward(const Rational& upper, Branch branch);
Rational ternary_line_inverse(const Rational& lower, Branch branch);

// Quaternary Cantor set over all of R: digit doubling of the full binary
// expansion (integer part included) with odd extension to negatives.
Rational quaternary_forward(const Rational& upper, Branch branch);
Rational quaternary_inverse(const Rational& lower, Branch branch);

// Same construction in an arbitrary target base (3 gives the self-similar
// middle-third set over R, 4 coincides with the quaternary maps).
Rational scaled_line_forward(const Rational& upper, int base, Branch branch);
Rational scaled_line_inverse(const Rational& lower, int base, Branch branch);

}  // namespace ndf
