#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace domcover::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 2;
inline constexpr int exit_capacity = 3;
inline constexpr int exit_usage = 64;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace domcover::cli
