#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nzf::cli {

/// Runs one CLI invocation. Exit codes: 0 success, 1 domain/data errors,
/// 2 usage errors, 3 timeout. Errors print one machine-parsable line to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nzf::cli
