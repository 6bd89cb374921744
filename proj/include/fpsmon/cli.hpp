#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fpsmon
{

// Exit codes shared by every subcommand.
enum exit_code : int { exit_ok = 0, exit_verdict_fails = 1, exit_usage = 2 };

// Runs one command line (args excludes the program name). Results go to
// `out`, diagnostics and timings to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace fpsmon
