#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncsym::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncsym::cli
