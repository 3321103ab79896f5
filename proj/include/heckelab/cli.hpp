#pragma once

#include <iosfwd>

namespace heckelab {

// Full command-line driver: `heckelab split|optimize|profile|verify ...`.
// Returns the process exit code: 0 success, 2 input/schema error, 3 invalid
// bundle, 4 precision exhausted, 5 property counterexample, 1 internal error.
// Reports go to `out` (or --output), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace heckelab
