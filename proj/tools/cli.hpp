#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chordcut::cli {

enum ExitCode : int { ok = 0, usage = 1, mismatch = 2, budget = 3 };

/// Runs one command line (args excludes the program name). Reports go to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chordcut::cli
