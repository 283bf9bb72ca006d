#pragma once

// Command-line front end. Exit codes: 0 success, 1 unexpected refutation,
// 2 usage error, 3 capacity exceeded.

#include <iosfwd>
#include <string>
#include <vector>

namespace oddspectra {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

/// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oddspectra
