#pragma once

// Brute-force arithmetic in F_{p^m}, used only as a test oracle.

#include <cstdint>
#include <vector>

#include "hyperjac/binforms.hpp"

namespace testing_support {

class ExtField {
public:
    using Elem = std::vector<std::uint32_t>;  // coefficients of 1, z, z^2, ...

    /// F_p[z]/(f) for the first monic irreducible f of degree m found by search.
    ExtField(std::uint32_t p, int m);

    std::uint32_t p() const { return p_; }
    int m() const { return m_; }
    std::uint64_t size() const;

    Elem zero() const { return Elem(static_cast<std::size_t>(m_), 0); }
    Elem from_base(std::uint32_t c) const;
    /// The element whose base-p digits are the coefficients of index.
    Elem nth(std::uint64_t index) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    bool is_zero(const Elem& a) const;

private:
    std::uint32_t p_;
    int m_;
    std::vector<std::uint32_t> modulus_;  // monic, degree m
};

/// True when every form vanishes at a common point of P^1(F_{p^m}) for some
/// m in [1, max_m]. Forms must be over F_p.
bool common_root_in_extensions(const std::vector<hyperjac::BinForm>& forms, int max_m);

}  // namespace testing_support
