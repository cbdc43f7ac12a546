#pragma once

#include <iosfwd>

namespace tradekit {

/// Exit statuses shared by every command.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

/// Parses and runs one command line. Output is buffered and only written
/// after validation and computation succeed.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Applies TRADEKIT_THREADS, if set, as the OpenMP thread cap.
void apply_thread_limit();

}  // namespace tradekit
