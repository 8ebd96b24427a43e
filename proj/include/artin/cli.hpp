#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace artin {

// Runs one CLI invocation. Exit codes: 0 success / mathematical "true",
// 1 mathematical "false" or violations found, 2 usage or parse errors,
// 3 budget or cap errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace artin
