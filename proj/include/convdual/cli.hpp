#pragma once

// Command-line front end. Exit codes: 0 success, 1 check violations or a
// refuted oracle, 2 input errors (bad arguments, malformed files, oracle
// protocol violations).

#include <iosfwd>
#include <string>
#include <vector>

namespace convdual {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitInput = 2;

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace convdual
