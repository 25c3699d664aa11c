#ifndef BSIG_TOOLS_CLI_HPP_
#define BSIG_TOOLS_CLI_HPP_

#include <ostream>

namespace bsig::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitVerificationFailed = 2,
};

/// Entry point of the `bsig` tool.  Normal output goes to `out`, diagnostics
/// to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bsig::cli

#endif  // BSIG_TOOLS_CLI_HPP_
