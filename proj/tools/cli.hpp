#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dynamik::cli {

/// Runs one command line (without the program name). Normal output goes to
/// `out`, diagnostics and usage text to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dynamik::cli
