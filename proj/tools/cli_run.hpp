#pragma once

// CLI front end, callable in-process for tests. run() never terminates the
// process; exit codes: 0 success, 1 invariant violation detected, 2 input
// error.

#include <ostream>
#include <string>
#include <vector>

namespace valex::cli {

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace valex::cli
