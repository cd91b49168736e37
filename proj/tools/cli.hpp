#ifndef SEPLAT_TOOLS_CLI_HPP
#define SEPLAT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace seplat::cli {

// Exit codes: 0 verdict true / success, 1 verdict false, 2 usage or input
// error, 3 internal invariant violation.
enum Exit : int { kTrue = 0, kFalse = 1, kUsage = 2, kInternal = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seplat::cli

#endif  // SEPLAT_TOOLS_CLI_HPP
