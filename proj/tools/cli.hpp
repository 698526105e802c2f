#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fsdem::cli {

enum ExitCode : int { ok = 0, usage = 1, data = 2, partial = 3 };

/// Entry point of the fsdem tool; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fsdem::cli
