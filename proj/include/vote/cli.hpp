#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vote {

// Exit codes: 0 success, 2 input error, 3 infeasible construction,
// 1 internal defect.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace vote
