// The lawforge command line, callable in-process for tests.

#ifndef LAWFORGE_CLI_HPP_
#define LAWFORGE_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace lawforge {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitLawFails = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lawforge

#endif  // LAWFORGE_CLI_HPP_
