#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torusfp {

// Exit codes: 0 success, 1 usage error, 2 malformed or invalid input data,
// 3 verification failure (theorem check is false), 4 inconclusive (unknown
// verdicts present).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// Home subcommand of every library operation. Coverage-tested: the table is
/// total over the operations and every subcommand owns at least one.
struct CommandBinding {
    std::string operation;
    std::string command;
};
const std::vector<CommandBinding>& command_bindings();

}  // namespace torusfp
