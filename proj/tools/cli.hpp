#pragma once

#include <iosfwd>

namespace lcaframe::cli {

// Exit codes: 0 pass or skip, 1 verification failure, 2 input error, 3 precondition error.
enum ExitCode { kOk = 0, kVerifyFailed = 1, kInputError = 2, kPrecondition = 3 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lcaframe::cli
