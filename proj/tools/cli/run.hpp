#pragma once

#include <iosfwd>

namespace loghat::cli {

enum ExitCode { kOk = 0, kUsage = 1, kValidation = 2, kUnknownStrict = 3 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace loghat::cli
