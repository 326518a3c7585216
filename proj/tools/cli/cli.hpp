#pragma once

#include <iosfwd>

namespace hyperjac::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kParse = 2,
    kPrecondition = 3,
    kVerification = 4,
};

/// Runs one command line. Input records come from the named file or `in`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hyperjac::cli
