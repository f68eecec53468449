#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace primcover::cli {

/// Exit codes: 0 all checks pass, 1 computation or validation failure,
/// 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace primcover::cli
