#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace massform::cli {

/// Runs one command-line invocation. `args` excludes the program name.
/// Reports go to `out`; one-line diagnostics go to `err`.
/// Exit codes: 0 success, 2 DSL parse error, 3 incompatible counting/group
/// (or other invalid input), 4 size cap exceeded, 5 invalid residue.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace massform::cli
