#pragma once

// Self-checks run by the `verify` command. Each suite compares two routes
// through the library on random inputs.

#include <cstdint>
#include <string>
#include <vector>

#include "hyperjac/scalars.hpp"

namespace hyperjac::cli {

struct SuiteResult {
    std::string name;
    int trials = 0;
    int passed = 0;
    std::vector<std::string> failures;  // at most a few, in trial order
    bool ok() const { return passed == trials; }
};

const std::vector<std::string>& suite_names();

/// Throws PreconditionError on an unknown suite name.
SuiteResult run_suite(const std::string& name, const Field& field, int trials, std::uint64_t seed);

}  // namespace hyperjac::cli
