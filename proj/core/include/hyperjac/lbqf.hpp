#pragma once

// Linear binary quadratic forms p = a x^2 + b xy + c y^2 over P^1, where
// V = O(i) + O(j), L = O(k), and a, b, c have slots 2i+k, i+j+k, 2j+k.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperjac/binforms.hpp"
#include "hyperjac/covers.hpp"
#include "hyperjac/sympoly.hpp"

namespace hyperjac {

struct StratumIndex {
    int i = 0;
    int j = 0;
    int k = 0;

    int slot_a() const noexcept { return 2 * i + k; }
    int slot_b() const noexcept { return i + j + k; }
    int slot_c() const noexcept { return 2 * j + k; }
    int genus() const noexcept { return i + j + k - 1; }
    int degree() const noexcept { return 2 * i + 2 * j + k; }
    bool canonical() const noexcept { return i <= j; }
    StratumIndex swapped() const noexcept { return {j, i, k}; }
    std::string to_string() const;

    friend bool operator==(const StratumIndex&, const StratumIndex&) = default;
};

class Lbqf {
public:
    /// Validates the slots. Orientation is kept as given; see canonicalize().
    Lbqf(StratumIndex idx, BinForm a, BinForm b, BinForm c);
    /// The zero form of a stratum.
    static Lbqf zero(const Field& field, StratumIndex idx);

    const StratumIndex& idx() const noexcept { return idx_; }
    const BinForm& a() const noexcept { return a_; }
    const BinForm& b() const noexcept { return b_; }
    const BinForm& c() const noexcept { return c_; }
    const Field& field() const noexcept { return a_.field(); }

    int g() const noexcept { return idx_.genus(); }
    int n() const noexcept { return idx_.degree(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero(); }

    std::string to_string() const;
    friend bool operator==(const Lbqf&, const Lbqf&) = default;

private:
    StratumIndex idx_;
    BinForm a_;
    BinForm b_;
    BinForm c_;
};

struct Canonicalized {
    Lbqf form;
    bool swapped;
};
/// Puts the form in orientation i <= j, swapping a and c when needed.
Canonicalized canonicalize(const Lbqf& l);

/// (i,j,k; a,b,c) -> (j,i,k; c,b,a). An involution.
Lbqf swap_orientation(const Lbqf& l);

struct Invariants {
    int g;
    int n;
};
Invariants invariants(const Lbqf& l);

/// b^2 - 4ac, of slot 2(i+j+k).
BinForm disc_form(const Lbqf& l);

struct Classification {
    bool p_identically_zero = false;
    bool reduced = false;
    bool integral = false;
    bool smooth = false;
    bool line_bundle = false;
    /// Monic gcd of the nonzero members of {a, b, c}; unset when p = 0.
    std::optional<BinForm> bad_fiber_factor;
    /// K-rational roots of bad_fiber_factor.
    std::vector<ProjPoint> bad_fibers;
    /// Square root of a nonzero square discriminant.
    std::optional<BinForm> disc_sqrt;

    /// Throws std::logic_error if the verdicts are inconsistent for a
    /// discriminant of the given slot.
    void check_consistency(int disc_slot) const;
    bool same_verdicts(const Classification& o) const;
};

Classification classify(const Lbqf& l);

/// True when p does not factor over K; computed through an explicit
/// factorization attempt. Requires a nonzero discriminant.
bool irreducibility_crosscheck(const Lbqf& l);

/// x -> r x + u y, y -> v x + w y, p -> lambda * p. u has slot j-i and v slot
/// i-j, so v is forced to zero unless i = j.
struct Automorphism {
    FieldElem r;
    BinForm u;
    BinForm v;
    FieldElem w;
    FieldElem lambda;

    static Automorphism identity(const Field& field, const StratumIndex& idx);
    /// r w - u v (a scalar; u v vanishes unless i = j).
    FieldElem det() const;
    void validate(const StratumIndex& idx) const;
};

Lbqf apply_automorphism(const Lbqf& l, const Automorphism& phi);
Automorphism random_automorphism(const Field& field, const StratumIndex& idx, std::uint64_t seed);

/// Same coefficient data at (i+m, j+m, k-2m).
Lbqf twist(const Lbqf& l, int m);

/// 2 min(i,j) + k >= 0.
bool in_Jbd(const Lbqf& l);

/// Forms for tau^2 = -b tau - ac, tau x = -c y - b x, tau y = a x and the
/// primed table with tau' = 2 tau + b. Entries are (x coefficient, y coefficient).
struct MultiplicationTable {
    BinForm tau_sq_linear;    // -b
    BinForm tau_sq_constant;  // -ac
    BinForm tau_x_x, tau_x_y; // -b, -c
    BinForm tau_y_x, tau_y_y; // a, 0
    BinForm taup_sq;          // b^2 - 4ac
    BinForm taup_x_x, taup_x_y;  // -b, -2c
    BinForm taup_y_x, taup_y_y;  // 2a, b
};
MultiplicationTable multiplication_table(const Lbqf& l);

struct EvaluatedTable {
    FieldElem tau_sq_linear, tau_sq_constant;
    FieldElem tau_x_x, tau_x_y, tau_y_x, tau_y_y;
    FieldElem taup_sq;
    FieldElem taup_x_x, taup_x_y, taup_y_x, taup_y_y;
    /// a, b, c all vanish at q: tau' kills the fiber and M is not locally free there.
    bool annihilates_fiber;
};
EvaluatedTable multiplication_table_at(const Lbqf& l, const ProjPoint& q);

Cover forget_to_cover(const Lbqf& l);

struct GenericPrediction {
    bool reduced;
    bool integral;
    bool smooth;
    bool line_bundle;
};
GenericPrediction generic_stratum_table(const StratumIndex& idx);

/// Compares a classification with the generic prediction; integrality is
/// judged over the closure so that constant discriminants do not depend on K.
bool matches_generic(const Lbqf& l, const Classification& c, const GenericPrediction& pred);

bool stratum_specializes(const StratumIndex& from, const StratumIndex& to);

struct LocusEquations {
    std::vector<std::string> variables;  // a0.., b0.., c0..
    std::vector<SymPoly> d;              // coefficient of s^l t^(N-l) in b^2-4ac
    /// Res(F_s, F_t) of F = sum d_l s^l t^(N-l), in the symbols d0..dN.
    std::optional<SymPoly> discdisc_in_d;
    /// The same polynomial in the a, b, c coefficients (smallest strata only).
    std::optional<SymPoly> discdisc_in_coeffs;
};

inline constexpr int kDiscDiscDegreeCap = 6;
inline constexpr int kDiscDiscExpandCap = 2;

/// Throws PreconditionError when want_discdisc and 2(i+j+k) exceeds kDiscDiscDegreeCap.
LocusEquations locus_equations(const StratumIndex& idx, bool want_discdisc);

/// Uniform coefficients: residues over F_p, integers in [-9, 9] over Q.
Lbqf random_form(const StratumIndex& idx, const Field& field, std::uint64_t seed);

}  // namespace hyperjac
