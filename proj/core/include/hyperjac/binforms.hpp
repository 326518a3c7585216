#pragma once

// Homogeneous binary forms in s, t over a scalars field.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperjac/scalars.hpp"

namespace hyperjac {

/// A point [s0 : t0] of P^1, stored in canonical form: t0 = 1, or [1 : 0].
class ProjPoint {
public:
    ProjPoint(FieldElem s0, FieldElem t0);
    static ProjPoint affine(const FieldElem& s0) { return ProjPoint(s0, FieldElem::one(s0.field())); }
    static ProjPoint infinity(const Field& f) { return ProjPoint(FieldElem::one(f), FieldElem::zero(f)); }

    const FieldElem& s0() const noexcept { return s0_; }
    const FieldElem& t0() const noexcept { return t0_; }
    bool is_infinity() const { return t0_.is_zero(); }
    std::string to_string() const;

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

private:
    FieldElem s0_;
    FieldElem t0_;
};

/// A binary form of a fixed slot degree d. coeffs()[k] is the coefficient
/// of s^(d-k) t^k. Negative slots hold only the zero form.
class BinForm {
public:
    /// The zero form of the given slot.
    BinForm(const Field& field, int slot);
    BinForm(const Field& field, int slot, std::vector<FieldElem> coeffs);

    static BinForm monomial(const Field& field, int s_exp, int t_exp, const FieldElem& c);
    static BinForm constant(const FieldElem& c);

    const Field& field() const noexcept { return field_; }
    int slot() const noexcept { return slot_; }
    const std::vector<FieldElem>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of s^(slot-k) t^k.
    const FieldElem& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

    bool is_zero() const;
    /// Largest m with t^m dividing the form. Requires a nonzero form.
    int t_order() const;
    /// First nonzero coefficient (that of the highest power of s present).
    FieldElem leading_coeff() const;
    /// Divides by leading_coeff(); the zero form is returned unchanged.
    BinForm monic() const;

    BinForm operator-() const;
    BinForm& operator+=(const BinForm& o);
    BinForm& operator-=(const BinForm& o);
    friend BinForm operator+(BinForm a, const BinForm& b) { return a += b; }
    friend BinForm operator-(BinForm a, const BinForm& b) { return a -= b; }
    friend BinForm operator*(const BinForm& a, const BinForm& b);
    friend BinForm operator*(const FieldElem& c, const BinForm& f);
    friend bool operator==(const BinForm& a, const BinForm& b);
    friend bool operator!=(const BinForm& a, const BinForm& b) { return !(a == b); }

    BinForm pow(int n) const;
    BinForm derivative_s() const;
    BinForm derivative_t() const;

    /// Value at the canonical representative of q.
    FieldElem eval(const ProjPoint& q) const;

    /// Applies fn to every coefficient, producing a form over `target`.
    template <class Fn>
    BinForm map_coeffs(const Field& target, Fn&& fn) const {
        std::vector<FieldElem> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(fn(c));
        return BinForm(target, slot_, std::move(out));
    }

    /// Polynomial-expression text accepted by parse_form, e.g. "s^4+t^4".
    std::string to_string() const;

private:
    Field field_;
    int slot_;
    std::vector<FieldElem> coeffs_;
};

/// Monic gcd. Throws PreconditionError when both forms are zero.
BinForm gcd(const BinForm& f, const BinForm& g);

/// Exact quotient f / g, or nothing when g does not divide f.
std::optional<BinForm> divide_exact(const BinForm& f, const BinForm& g);

/// Determinant of the Sylvester matrix built from the slot degrees, so the
/// value vanishes iff f and g share a projective root over the closure.
/// Throws on zero input.
FieldElem resultant(const BinForm& f, const BinForm& g);

/// Res(F_s, F_t). Vanishes iff F has a repeated root over the closure
/// (when char K does not divide the slot degree). Zero for the zero form.
FieldElem disc_binform(const BinForm& f);

/// G with G*G == F exactly over the base field, if one exists.
std::optional<BinForm> is_square(const BinForm& f);

/// True when F = c * G^2 for a scalar c, i.e. F is a square over the closure.
bool is_square_up_to_unit(const BinForm& f);

/// Order of vanishing of F at q. Throws on the zero form.
int multiplicity_at(const BinForm& f, const ProjPoint& q);

/// F = unit * prod factor^multiplicity, factors monic and pairwise coprime,
/// multiplicities strictly increasing. Handles small characteristic.
struct SquarefreeDecomposition {
    FieldElem unit;
    std::vector<std::pair<BinForm, int>> factors;
};
SquarefreeDecomposition squarefree_decomposition(const BinForm& f);

/// Distinct K-rational roots of a nonzero form (finite roots first, then [1:0]).
std::vector<ProjPoint> rational_roots(const BinForm& f);

}  // namespace hyperjac
