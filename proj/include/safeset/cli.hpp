#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace safeset {

// Runs one CLI invocation (args exclude the program name). Exit status:
// 0 success, 1 infeasible/absent/unsafe, 2 usage or parse errors, 3 solver
// errors (budget/cap/precondition failures).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace safeset
