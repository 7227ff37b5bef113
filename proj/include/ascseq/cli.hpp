#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ascseq/distribution.hpp"

namespace ascseq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. All output goes to the given
/// streams; the return value is the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// {"pattern", "n", "stats", "total", "entries": [[[k1,k2,...], "count"], ...]} with
/// counts as decimal strings.
std::string distribution_to_json(const core::DistributionTable& table);

/// Inverse of distribution_to_json. Throws UsageError on malformed input.
core::DistributionTable distribution_from_json(const std::string& text);

}  // namespace ascseq::cli
