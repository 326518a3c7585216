#pragma once

// One-parameter families over K((e)) and their limits at e = 0.

#include <optional>
#include <vector>

#include "hyperjac/covers.hpp"
#include "hyperjac/hirzebruch.hpp"
#include "hyperjac/lbqf.hpp"

namespace hyperjac {

/// Minimum e-valuation over all coefficients of a, b, c. Throws on p = 0.
int family_valuation(const Lbqf& family);

/// Substitutes e = 0 in a family whose coefficients all have valuation >= 0.
Lbqf specialize_at_zero(const Lbqf& family);

struct Specialization {
    int v;       // valuation that was cleared
    Lbqf limit;  // over the base field
};

/// Multiplies (a, b, c) by e^-v and sets e = 0.
Specialization clear_and_specialize(const Lbqf& family);

/// Rescales x -> e^m1 x, y -> e^m2 y and L by e^mL, i.e.
/// (a e^(2m1+mL), b e^(m1+m2+mL), c e^(2m2+mL)), then sets e = 0.
/// Not canonical: different weights can give non-isomorphic limits.
Lbqf weighted_specialize(const Lbqf& family, int m1, int m2, int mL);

struct LimitReport {
    int v;
    Lbqf limit;
    Classification classification;
    BinForm disc;                              // disc_form of the limit
    std::vector<RamificationFactor> ramification;  // empty when disc = 0
    std::optional<Bidegree> bidegree;          // reducible, reduced line bundles
};

LimitReport classify_limit(const Lbqf& family);

}  // namespace hyperjac
