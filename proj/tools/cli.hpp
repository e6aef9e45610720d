#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bracelet::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

inline constexpr int kTriangleMax = 5000;
inline constexpr int kBruteMax = 28;
inline constexpr int kRootDegreeMax = 2000;

/// Runs one invocation; `args` excludes the program name. Files named "-" (the
/// default for --out) go to `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bracelet::cli
