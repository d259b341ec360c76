#pragma once

// Command-line front end. Exit codes: 0 success / true, 1 checked false,
// 2 usage or input error, 3 internal invariant violated.

#include <ostream>
#include <string>
#include <vector>

namespace zdext {

/// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zdext
