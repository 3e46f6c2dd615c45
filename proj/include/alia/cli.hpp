#pragma once

#include <iosfwd>

namespace alia::cli {

/// Exit codes: 0 pass, 1 check or verification failure, 2 usage or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace alia::cli
