#ifndef STEPCOUNT_CLI_H_
#define STEPCOUNT_CLI_H_

#include <iosfwd>

namespace stepcount {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFailed = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `stepcount` tool. Subcommands: run, sweep, check, fit,
// classify, oracle-check. Returns 0 on success or a passing verdict, 1 on a
// failing verdict, 2 on bad usage or unreadable input.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stepcount

#endif  // STEPCOUNT_CLI_H_
