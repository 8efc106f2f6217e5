#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hypercol::cli {

enum ExitCode : int {
  success = 0,
  negative_verdict = 1,
  input_error = 2,
  resource_exhausted = 3,
};

/// Runs one command line (args[0] is the program name). Results go to `out`
/// as JSON, diagnostics to `err`.
auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

} // namespace hypercol::cli
