#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "noncross/lattice.hpp"
#include "noncross/twisted.hpp"

namespace noncross {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitMath = 1,
  kExitParse = 2,
  kExitConfig = 3,
  kExitVerifyFailed = 4,
};

/// Runs the tool on argv-style arguments (without the program name), writing
/// results to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "2,0;0,3" -> {{2,0},{0,3}}.
IntMatrix parse_matrix(const std::string& text);
/// "1,0,-2" -> (1,0,-2).
ExponentVector parse_exponent(const std::string& text);
/// Inverse of parse_matrix.
std::string format_matrix(const IntMatrix& m);

}  // namespace noncross
