#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ndf::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;        // bad flags, unparsable numbers, unknown bijection
inline constexpr int kNotInCantorSet = 2;    // some map row could not be evaluated
inline constexpr int kCoefficientFile = 3;   // missing or corrupt coefficient file
inline constexpr int kQuadratureFailure = 4;
inline constexpr int kSelftestFailed = 5;

// args excludes the program name. Results go to `out` unless --output is
// given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ndf::cli
