#ifndef LAMDIST_CLI_HPP
#define LAMDIST_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lamdist {

// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;       // negative decision
inline constexpr int kExitUsage = 2;    // usage, parse or input error
inline constexpr int kExitUnknown = 3;  // fuel exhausted, or an unknown verdict

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lamdist

#endif  // LAMDIST_CLI_HPP
