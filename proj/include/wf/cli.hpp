#pragma once

#include <iosfwd>
#include <string>

#include "wf/core.hpp"

namespace wf {

/// Exit codes of the wfrec command.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,     // property failure or exhausted budget
  kExitParseError = 2,  // bad syntax or bad usage
  kExitInputError = 3,  // well-formed input violating a data invariant
};

struct CliConfig {
  std::string subcommand;
  Nat seed = 0;
  Nat max_steps = 10000;
  bool json = false;
  /// Nesting limit for ordinal notations.
  Nat depth = 64;
};

/// Runs the wfrec command line; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wf
