#pragma once

// Batch front end. Exit codes: 0 all checks pass, 1 a check failed,
// 2 usage or domain error, 3 I/O or parse error.

#include <iosfwd>
#include <string>
#include <vector>

namespace workbench {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace workbench
