#ifndef CHORDAL_TOOLS_CLI_HPP
#define CHORDAL_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace chordal::cli {

enum ExitCode : int {
    kOk = 0,
    kNegative = 1,
    kInputError = 2,
    kBudgetExhausted = 3,
};

/// Runs the command line `args` (without the program name). Input files
/// named "-" or omitted are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace chordal::cli

#endif  // CHORDAL_TOOLS_CLI_HPP
