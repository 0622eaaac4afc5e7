#pragma once

#include <ostream>

namespace liedeform {

/// Exit codes of the command-line interface.
enum ExitCode : int { exit_ok = 0, exit_validation = 1, exit_usage = 2 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace liedeform
