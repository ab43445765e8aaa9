#pragma once

#include <ostream>

namespace henon::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 2,
    kNumeric = 3,
    kCheckFailed = 4,
};

/// Entry point of henon_lab. Output files go to --out paths; "-" or no path
/// means `out`. Diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

} // namespace henon::cli
