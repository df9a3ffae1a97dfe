#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliquescope::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPipeline = 3;

// Runs the `cliquescope` command line. args excludes the program name.
// Results go to `out` unless --output is given; diagnostics and the classify
// summary line go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cliquescope::cli
