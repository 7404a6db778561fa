#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace revmult {

// Exit codes: 0 = positive answer, 1 = well-formed query with a negative
// answer, 2 = usage or input error. Data goes to `out`, diagnostics to `err`.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

/// Runs one CLI command (args exclude the program name). The binary in
/// tools/ forwards argv here; tests drive it with string streams.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace revmult
