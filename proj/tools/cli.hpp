#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cfk::cli {

inline constexpr const char* kToolVersion = "cfk 1.0.0";

/// Run one CLI invocation. `args` excludes the program name.
/// Exit codes: 0 success, 1 usage error, 2 certification/expansion failure.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cfk::cli
