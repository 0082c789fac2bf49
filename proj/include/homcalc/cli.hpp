#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace homcalc {

/// Runs one command; args exclude the program name. Returns the exit code:
/// 0 success, 1 verification failure or candidate found, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homcalc
