#pragma once

#include <iosfwd>

namespace cantor::cli {

// Full command-line entry point, streams injected for testability.
// Exit codes: 0 success, 1 usage or input error, 2 disagreement (between
// characterizations, or between computed terms and reference data).
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace cantor::cli
