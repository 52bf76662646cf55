#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace infl {

/// Runs the infl command line; args exclude the program name.
/// Exit codes: 0 success, 1 law/validation failure or cap exceeded, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace infl
