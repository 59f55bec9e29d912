#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace goldman {

// Dispatches a full command line (program name excluded). Results go to out,
// diagnostics to err. Exit codes: 0 success, 1 verification failure, 2 input
// error, 3 degenerate or non-stabilized geometry.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace goldman
