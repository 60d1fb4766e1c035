#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace woq {

// Batch front door used by the woq binary and by the CLI tests.
// Verbs: count, bottoms, quotient, hopf, fan, accept. Returns the process
// exit code; all output goes to out/err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace woq
