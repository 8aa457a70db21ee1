#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dreidel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the dreidel command line. args[0] is the program name. All output is
/// written after the computation finishes; exit codes are kExit*.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dreidel::cli
