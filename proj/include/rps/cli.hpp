#pragma once

#include <exception>
#include <string>
#include <vector>

namespace rps::cli {

/// Exit codes: 0 success, 1 configuration/usage error, 2 solver error, 3 I/O error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitSolver = 2;
inline constexpr int kExitIo = 3;

int exit_code_for(const std::exception& e);

/// Entry point of the `rps` tool. Messages go to stderr, summaries to stdout.
int main(int argc, char** argv);
int main(const std::vector<std::string>& args);

}  // namespace rps::cli
