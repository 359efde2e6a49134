#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace modfun::cli {

/// Exit statuses of `run`.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns kOk exactly when every emitted report is empty.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modfun::cli
