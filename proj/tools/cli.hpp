#ifndef SVRPLL_TOOLS_CLI_HPP_
#define SVRPLL_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace svrpll::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitLimit = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitIo = 74;

// Verbosity from SVRPLL_LOG: 0 quiet, 1 info (default), 2 debug.
int log_level();

// `args` excludes the program name, e.g. {"gen", "--targets", "15", ...}.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace svrpll::cli

#endif  // SVRPLL_TOOLS_CLI_HPP_
