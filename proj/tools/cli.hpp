#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wmcli {

/// Runs the command line `args` (without the program name). Returns the
/// process exit code: 0 success or consistent verdict, 1 error, 2 negative
/// verdict or failed self-test.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wmcli
