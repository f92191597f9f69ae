#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nil2::cli {

enum ExitCode { kOk = 0, kCorpusFailure = 1, kInputError = 2, kUnknown = 3 };

/// Runs one invocation; `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nil2::cli
