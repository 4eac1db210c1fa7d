#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ffheight {

// One CLI invocation captured in-process, so tests can assert on the exact
// output bytes without spawning a subprocess.
struct CliResult {
  int exit_code = 0;
  std::string out;  // the report (JSON by default); nothing else lands here
  std::string err;  // usage text, diagnostics, timings
};

// Runs one command line (arguments only, no program name). The batch
// subcommand reads its command lines from batch_input when given, else from
// stdin.
CliResult cli_run(const std::vector<std::string>& args,
                  std::istream* batch_input = nullptr);

// Process entry point: forwards argv, writes the captured streams, returns
// the exit code.
int cli_main(int argc, const char* const* argv);

}  // namespace ffheight
