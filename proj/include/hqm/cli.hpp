#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hqm {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;

/// Runs one subcommand; args exclude the program name. Returns the exit code.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hqm
