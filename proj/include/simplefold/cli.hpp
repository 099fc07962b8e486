#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simplefold::cli {

enum ExitCode : int {
  kOk = 0,            ///< foldable / generation succeeded / no disagreement
  kNegative = 1,      ///< unfoldable / no valid assignment / disagreement
  kUsage = 2,         ///< usage or parse error
  kInconclusive = 3,  ///< oracle budget exhausted
};

/// `args` excludes the program name. Reports go to `out` as one JSON
/// document; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace simplefold::cli
