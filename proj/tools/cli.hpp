#ifndef ROOKLAB_TOOLS_CLI_HPP
#define ROOKLAB_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rooklab::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kCapExceeded = 2;
inline constexpr int kDiscrepancy = 3;
inline constexpr int kInternal = 4;

/// Runs one invocation; args exclude the program name. Records go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rooklab::cli

#endif
