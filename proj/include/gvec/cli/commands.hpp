#pragma once

#include <iosfwd>

namespace gvec::cli {

/// Process exit statuses.
enum ExitStatus : int {
    kExitOk = 0,
    kExitUsage = 1,      // domain or usage error
    kExitInvariant = 2,  // a checked invariant failed
};

/// Entry point of the `gvec` tool. Subcommands: vec, unvec, shift, verify,
/// bench. Output files named "-" go to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gvec::cli
