#ifndef WEF_CLI_H_
#define WEF_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace wef {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // not WEF, infeasible, bound violated
inline constexpr int kExitUsage = 2;     // bad arguments or unreadable input

// Runs the command line `args` (args[0] is the program name). Reports go to
// `out`, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace wef

#endif  // WEF_CLI_H_
