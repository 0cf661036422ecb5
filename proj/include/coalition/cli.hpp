#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coalition::cli {

/// Exit codes: kOk for success or a true verdict, kFalse for a false verdict
/// (not SP, theorem failed, family not recognized, not isomorphic), kUsage for
/// usage and input errors.
inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;
inline constexpr int kUsage = 2;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coalition::cli
