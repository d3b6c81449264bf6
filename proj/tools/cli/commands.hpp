#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace clforms::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kCheckFailed = 3, kCap = 4 };

/// Runs the clforms command line. JSON reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses a grid such as "q=2,3;n=2;l=4..6" into per-key value lists.
/// Throws Error(ParseError).
struct Grid {
  std::vector<unsigned> q, n, l;
  std::vector<std::int64_t> x;  // empty: every in-range x
};
Grid parse_grid(const std::string& text);

}  // namespace clforms::cli
