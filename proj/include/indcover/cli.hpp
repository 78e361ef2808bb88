#pragma once

#include <ostream>

namespace indcover::cli {

/// Exit codes: 0 success, 1 verification or file failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace indcover::cli
