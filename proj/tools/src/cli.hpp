#pragma once

#include <ostream>

namespace jordan::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kInconclusive = 2, kUsage = 3 };

/// Entry point of the jordanlogic tool. Writes the JSON report (or its
/// --pretty rendering) to `out` and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jordan::cli
