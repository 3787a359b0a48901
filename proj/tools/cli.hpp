#pragma once

#include <ostream>

namespace sf::cli {

enum ExitCode : int { Ok = 0, InvalidParameters = 2, ParseFailure = 3, BudgetExceeded = 4 };

/// Runs the command line; reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace sf::cli
