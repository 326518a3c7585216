#pragma once

// Univariate helper polynomials in x = s/t, used internally by the form layer.

#include <utility>
#include <vector>

#include "hyperjac/binforms.hpp"

namespace hyperjac::detail {

/// Dense polynomial, c[i] the coefficient of x^i, trailing zeros trimmed.
class UPoly {
public:
    explicit UPoly(const Field& f) : field_(f) {}
    UPoly(const Field& f, std::vector<FieldElem> c);

    const Field& field() const noexcept { return field_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    FieldElem coeff(int i) const;
    const FieldElem& lead() const { return c_.back(); }
    const std::vector<FieldElem>& coeffs() const noexcept { return c_; }

    UPoly monic() const;
    UPoly derivative() const;
    FieldElem eval(const FieldElem& x) const;
    bool is_one() const;

private:
    void trim();
    Field field_;
    std::vector<FieldElem> c_;
};

UPoly upoly_add(const UPoly& a, const UPoly& b);
UPoly upoly_sub(const UPoly& a, const UPoly& b);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b);
UPoly upoly_mod(const UPoly& a, const UPoly& b);
/// Monic gcd; the gcd of two zero polynomials is zero.
UPoly upoly_gcd(const UPoly& a, const UPoly& b);
/// Squarefree factors of a monic polynomial with their multiplicities.
/// Entries may repeat a multiplicity; callers merge.
std::vector<std::pair<UPoly, int>> upoly_squarefree(const UPoly& f);
/// Distinct roots in the base field, ascending in the canonical order
/// (by residue over F_p, by value over Q).
std::vector<FieldElem> upoly_roots(const UPoly& f);

struct Dehom {
    int t_order;
    UPoly poly;
};
/// F = t^m * t^(d-m) f(s/t); returns m and f.
Dehom dehomogenize(const BinForm& f);
BinForm homogenize(const UPoly& p, int slot);
BinForm t_power(const Field& f, int m);

}  // namespace hyperjac::detail
