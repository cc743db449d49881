#pragma once

namespace spikernel {

// Subcommands: search, score, params, select, report.
// Exit codes: 0 success, 1 usage error, 2 runtime error.
int run_cli(int argc, const char* const* argv);

}  // namespace spikernel
