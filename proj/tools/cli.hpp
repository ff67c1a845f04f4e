#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace corelab::cli {

enum Exit { pass = 0, mismatch = 1, usage = 2, budget = 3 };

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace corelab::cli
