#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace logmap::cli {

inline constexpr std::string_view kVersion = "1.0.0";

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,   // bad flags, non-prime modulus, seed outside a required set
  kMismatch = 2,     // closed-form prediction disagrees with brute force
  kBoundViolation = 3,
};

/// Runs one command line (without the program name). Results go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logmap::cli
