#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tropjac::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kRefused = 1;   ///< hypotheses unmet, invalid curve on validate
inline constexpr int kBadInput = 2;  ///< unreadable files, schema or usage errors
inline constexpr int kInternal = 3;

/// Runs the command line tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropjac::cli
