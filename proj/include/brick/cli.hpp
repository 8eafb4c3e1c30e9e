#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace brick::cli {

inline const std::vector<std::string> kCommands = {"demazure", "complex", "brick-polytope", "check-toric", "duality",
                                                   "network",  "assoc",   "richardson",     "strata"};

struct Request {
  std::string command;
  std::string datum;
  /// Positional arguments after the datum: words as 1-based index strings.
  std::vector<std::string> args;
  /// Empty selects the command's default.
  std::string format;
  bool oracle = false;
  std::uint64_t seed = 0;
};

/// Exit status: 0 success, 1 domain error, 2 parse error. Results go to
/// `out`, diagnostics to `err`.
int run(const Request& request, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and runs. Usage errors exit with 2.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace brick::cli
