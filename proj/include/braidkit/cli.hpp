#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidkit {

/// Exit codes: 0 all checks pass, 1 a check failed or a construction was
/// refused, 2 usage, parse or IO error. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidkit
