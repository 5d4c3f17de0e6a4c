#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace padic::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kAssertion = 2, kNumeric = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padic::cli
