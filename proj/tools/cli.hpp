#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hkcones::cli {

/// Runs one command line (without the program name). JSON or SVG goes to
/// `out` unless --out is given; diagnostics go to `err`.
/// Returns 0 on success, 1 on domain errors, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hkcones::cli
