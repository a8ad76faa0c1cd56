#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace srcid {

// args excludes the program name. Exit codes: 0 success, 1 a case failed,
// 2 invalid arguments or unknown case.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace srcid
