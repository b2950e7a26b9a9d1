#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parabolic {

/// Process exit codes of the command-line driver.
enum ExitCode : int {
    kExitPass = 0,
    kExitCheckFailed = 1,
    kExitParseError = 2,
    kExitUsage = 3,
    kExitAlgebraError = 4,
};

/// Runs one command line (without the program name), writing the rendered
/// reports to `out` or to the --out file and diagnostics to `err`.
///
///   verify cocycle|counit|verma|coproducts|factorized|constraints|composition
///   rmatrix [--xi q|formal] [--zeta q|formal] [--check expansion,qybe,triangular,semiclassical] [--eta q]
///   eval [--rep fund|universal] --expr <text>
///   limits
///
/// Global flags: --degree D (6), --b q (2), --format text|json, --out path, --timing.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace parabolic
