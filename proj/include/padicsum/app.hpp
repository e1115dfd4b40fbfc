#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace padicsum {

/// Parses argv-style arguments (without the program name) and runs the command.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padicsum
