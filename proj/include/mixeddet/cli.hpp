#pragma once

// Command dispatch for the mixeddet tool.
//
// Exit codes: 0 success / all checks passed, 1 a check failed or a predicate
// is false (the witness is printed), 2 usage or input error.

#include <ostream>
#include <string>
#include <vector>

namespace mixeddet::cli {

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mixeddet::cli
