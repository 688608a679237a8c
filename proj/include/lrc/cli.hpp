#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lrc {

inline constexpr int kExitUsage = 64;

/// Runs the command-line tool. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lrc
