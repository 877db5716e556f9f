#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chevcert::cli {

// Runs one CLI invocation. Exit codes: 0 success, 1 negative verdict
// (hypotheses fail; not a malfunction), 2 usage or input error, 3 internal
// invariant violation (a theorem-contradicting outcome; always a defect).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chevcert::cli
