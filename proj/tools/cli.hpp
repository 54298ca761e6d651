#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gsb::cli {

/// Exit statuses shared by every subcommand.
enum Exit : int {
  kOk = 0,
  kViolation = 1,    ///< verify found a bad center
  kError = 2,        ///< usage, input, parameter or resource error
  kStageFailed = 3,  ///< attack ran to completion without a certificate
};

/// Runs `gsbench` with `args` (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsb::cli
