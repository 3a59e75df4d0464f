// Command-line front end; main() forwards here so tests can drive it in-process.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dicke::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kOk = 0,
  kSuiteFailure = 1,
  kBadInput = 2,
  kDomainError = 3,
};

/// args excludes the program name. Output files go to --out, everything else
/// to `out`; diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dicke::cli
