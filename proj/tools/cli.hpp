#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cuspcount::cli {

// Exit codes: 0 ok, 1 certificate or verification failure (and other
// errors), 2 malformed input, 3 budget exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cuspcount::cli
