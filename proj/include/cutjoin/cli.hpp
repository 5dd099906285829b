#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cutjoin::cli {

// Runs one CLI invocation. Returns 0 on success, 1 on verification failure,
// 2 on usage errors (malformed flags, unparsable polynomial).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cutjoin::cli
