#pragma once

#include <iosfwd>

namespace tpmine {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitBadInput = 1,  // input file missing/unreadable/malformed, or output not writable
  kExitBadUsage = 2,  // invalid flags or flag values
};

/// Entry point for the `tpmine` tool, with injectable streams for tests.
/// Subcommands: `mine` and `compare`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tpmine
