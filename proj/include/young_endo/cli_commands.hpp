#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace young_endo {

// Parse and execute one command-line invocation (arguments without the
// program name).  Results go to out, diagnostics to err.  Returns the
// process exit code: 0 on success, 1 on domain or usage errors, 2 when a
// size guard aborts the computation.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

} // namespace young_endo
