#ifndef CURVECOUNT_CLI_HPP
#define CURVECOUNT_CLI_HPP

#include <iosfwd>

namespace curvecount {

// Full CLI entry point, separated from main() so tests can drive commands
// in-process and compare output byte for byte.
// Exit codes: 0 success, 1 failed invariants, 2 usage or input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace curvecount

#endif  // CURVECOUNT_CLI_HPP
