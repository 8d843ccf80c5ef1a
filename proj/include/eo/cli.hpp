#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eo::cli {

// Exit statuses of run().
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;    // solver or library error
inline constexpr int kUsage = 2;      // bad arguments or malformed input file
inline constexpr int kMismatch = 3;   // verify or census found a disagreement

/// Runs one command. `args` excludes the program name; `in` serves paths
/// given as "-".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

} // namespace eo::cli
