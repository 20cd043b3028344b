#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coverq::cli {

/// Runs the coverq command line. Returns the process exit code:
/// 0 pass, 1 invariant violation, 2 hunt finding, 3 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coverq::cli
