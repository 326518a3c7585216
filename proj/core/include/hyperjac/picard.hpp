#pragma once

// Picard groups of the moduli stacks as closed-form lookups, plus exact
// checks of the character weights and dimensions behind them.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hyperjac/lbqf.hpp"

namespace hyperjac {

struct AbGroupDesc {
    unsigned free_rank = 0;
    std::vector<long long> torsion;  // sorted, each >= 2

    AbGroupDesc(unsigned rank, std::vector<long long> tors);
    /// "Z^2 + Z/12Z", "Z", "Z/20Z", "0".
    std::string to_string() const;
    friend bool operator==(const AbGroupDesc&, const AbGroupDesc&) = default;
};

enum class StackId {
    hbar,      // all double covers
    hbar_red,  // reduced covers
    hbar_int,  // integral covers
    hur,       // smooth covers
    q,         // one stratum Q^{i,j,k}
    q_sm,
    q_lb,
    jbd,       // bounded compactified Jacobian
    jbd_lb,
    j,         // the universal Jacobian
};

StackId parse_stack_id(std::string_view name);
std::string stack_name(StackId id);

struct PicParams {
    int g = 0;
    int n = 0;
    int i = 0;
    int j = 0;
    int k = 0;
};

/// Throws UnsupportedError (with the reason) outside the known hypotheses.
AbGroupDesc pic(StackId id, const PicParams& params);

struct WeightReport {
    int trials = 0;
    int passed = 0;
    int exponent = 0;        // coefficient-homogeneity degree that was checked
    int character_weight = 0;
    std::vector<std::string> failures;
    bool ok() const { return passed == trials; }
};

/// disc_binform(l * sigma) = l^(4g+2) disc_binform(sigma) on random sigma of slot 2g+2.
WeightReport disc_weight_verify(int g, int trials, const Field& field, std::uint64_t seed);

/// disc(disc(l (a,b,c))) = l^(2(4g+2)) disc(disc(a,b,c)), and the same weight
/// for the torus characters x -> r x and y -> w y (or det when i = j).
WeightReport discdisc_weight_verify(const StratumIndex& idx, int trials, const Field& field, std::uint64_t seed);

struct StratumDims {
    int dim_v;
    int dim_group;
    /// dim Q(i,j,k) - dim Q(i-1,j+1,k); set only when both strata have
    /// nonnegative slots.
    std::optional<int> relative_codim_to_next;
    /// 3g+6 when every slot is nonnegative.
    std::optional<int> expected_dim_v;
};
StratumDims stratum_dims(const StratumIndex& idx);

}  // namespace hyperjac
