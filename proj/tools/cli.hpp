#ifndef VLCODES_TOOLS_CLI_HPP
#define VLCODES_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace vlc::cli {

// Exit codes: 0 computed (and condition holds for single checks),
// 1 condition fails, 2 usage or parse error, 3 undecidable / inconclusive.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vlc::cli

#endif  // VLCODES_TOOLS_CLI_HPP
