#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liejordan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitResource = 3;

/// Runs one command. args excludes the program name. Results go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liejordan::cli
