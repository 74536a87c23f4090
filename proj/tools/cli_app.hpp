#ifndef RADBC_CLI_APP_HPP
#define RADBC_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace radbc::cli {

// Exit codes: 0 success, 2 usage, 3 validation, 4 numerical failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Round-trippable double formatting (17 significant digits) used in all CSV
// output.
std::string format17(double v);

}  // namespace radbc::cli

#endif  // RADBC_CLI_APP_HPP
