// Command-line front end. Exit codes: 0 pass, 1 check failure or computation
// diagnostic, 2 usage error.
#ifndef GENUS_TOOLS_CLI_HPP
#define GENUS_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace genus::cli {

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace genus::cli

#endif
