#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loclaurent::cli {

/// Process exit codes. 0/1/2 are the stable contract shared by every
/// command; the character command refines domain failures into 3..5.
enum ExitCode : int {
  kOk = 0,
  kDomainFailure = 1,
  kUsageError = 2,
  kInconsistentData = 3,
  kNotAUnit = 4,
  kDenominatorVanishes = 5,
};

/// Environment variable overriding the default order margin.
inline constexpr const char *kMarginEnv = "LOCLAURENT_ORDER_MARGIN";

/// Runs the command line `args` (without the program name), writing reports
/// to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace loclaurent::cli
