#pragma once

// Double covers of P^1 given by a section sigma of O(2g+2).

#include <optional>
#include <vector>

#include "hyperjac/binforms.hpp"

namespace hyperjac {

struct Cover {
    int g;
    BinForm sigma;  // slot 2g+2

    Cover(int genus, BinForm section);
};

struct CoverClassification {
    bool reduced;
    bool integral;
    bool smooth;
    friend bool operator==(const CoverClassification&, const CoverClassification&) = default;
};

/// Verdicts for y^2 = sigma: reduced iff sigma != 0, integral iff sigma is
/// not a square over K, smooth iff sigma has no repeated root over the closure.
/// A constant sigma is smooth iff nonzero; the zero section is nothing.
CoverClassification classify_section(const BinForm& sigma);
CoverClassification classify_cover(const Cover& x);

/// True iff the nonzero form has no repeated root over the closure.
/// Uses Res(F_s, F_t) when the characteristic does not divide the degree.
bool squarefree_over_closure(const BinForm& f);

struct RamificationFactor {
    BinForm factor;                 // monic; linear when point is set
    int multiplicity;
    std::optional<ProjPoint> point; // unset for factors with no K-rational root
};

/// Squarefree decomposition of sigma with the linear K-rational factors
/// split out. Finite points come first, then [1:0], then unresolved factors.
std::vector<RamificationFactor> ramification(const Cover& x);

/// True when sigma vanishes nowhere on P^1 over the closure.
bool is_etale(const Cover& x);

}  // namespace hyperjac
