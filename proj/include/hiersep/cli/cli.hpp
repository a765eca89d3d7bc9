#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hiersep::cli {

  // Exit codes: 0 answered (either way), 1 internal failure, 2 input error,
  // 3 budget exceeded, 4 unsupported basis or level.
  enum ExitCode : int {
    exit_ok          = 0,
    exit_internal    = 1,
    exit_input       = 2,
    exit_resource    = 3,
    exit_unsupported = 4,
  };

  // args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

  // Splits a batch line into arguments; double quotes group, backslash
  // escapes the next character inside quotes.
  std::vector<std::string> split_line(std::string const& line);

}  // namespace hiersep::cli
