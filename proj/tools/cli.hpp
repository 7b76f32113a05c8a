#ifndef GHZGAMES_TOOLS_CLI_HPP
#define GHZGAMES_TOOLS_CLI_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "ghzgames/core.hpp"

namespace ghzgames::cli {

// Stable process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitDirection = 3,
  kExitGameShape = 4,
  kExitSearch = 5,
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// "x,y,z" -> three finite reals. Throws ParseError.
std::array<double, 3> parse_triple(const std::string& text);
// "theta,phi" -> two finite reals. Throws ParseError.
std::array<double, 2> parse_pair(const std::string& text);

// Throws ParseError on malformed text, NotUnit / ZeroVector on bad norms.
Direction parse_direction(const std::string& text, bool normalize);

// Runs `ghzgames <args...>` (args excludes the program name) and returns the
// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ghzgames::cli

#endif  // GHZGAMES_TOOLS_CLI_HPP
