#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abext {

// Runs the command line `args` (without the program name). Returns the exit
// code: 0 success, 1 property violation reported by verify, 2 invalid input.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace abext
