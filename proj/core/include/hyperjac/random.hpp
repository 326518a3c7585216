#pragma once

// Deterministic random draws. Bounded draws use rejection sampling on
// mt19937_64 so sequences do not depend on the standard library.

#include <cstdint>
#include <random>

#include "hyperjac/binforms.hpp"

namespace hyperjac {

using Rng = std::mt19937_64;

/// Uniform in [0, n).
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);
/// Uniform in [lo, hi].
long long uniform_between(Rng& rng, long long lo, long long hi);

/// A residue over F_p, an integer in [-9, 9] over Q.
FieldElem random_scalar(const Field& field, Rng& rng);
FieldElem random_nonzero_scalar(const Field& field, Rng& rng);
BinForm random_binform(const Field& field, int slot, Rng& rng);

}  // namespace hyperjac
