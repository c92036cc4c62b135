// Command-line front end. Exit codes: 0 success, 1 failed check or verify,
// 2 invalid input.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wca {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wca
