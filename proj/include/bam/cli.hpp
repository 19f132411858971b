#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bam {

// Runs the command-line driver on the given arguments (without the program
// name). Exit codes: 0 = YES/true, 1 = NO/false, 2 = input error,
// 3 = resource limit.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bam
