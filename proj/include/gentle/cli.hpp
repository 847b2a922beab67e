#ifndef GENTLE_CLI_HPP
#define GENTLE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gentle {

/// Dispatch a full command line (without argv[0]). Data goes to `out`,
/// diagnostics to `err`. Exit codes: 0 success, 1 domain error, 2 usage or
/// parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gentle

#endif
