#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Command-line front end. run_cli takes the argument list (without the
// program name) and writes results to `out` and diagnostics/progress to
// `err`, so tests can drive every surface in-process.
//
// Exit codes: 0 success, 1 computation error (bad input file, degree
// mismatch, parse error), 2 usage error (unknown flag or subcommand).
//
// Output is text by default; `--json` or QUINTIC_FORMAT=json selects JSON.
// Identical invocations produce identical bytes on `out`.

namespace quintic {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace quintic
