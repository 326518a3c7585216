#pragma once

// Exact scalars: the rationals, prime fields F_p (p odd), and Laurent
// polynomials in a uniformizer e over either of them.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "hyperjac/errors.hpp"

namespace hyperjac {

/// Identifies the field (or Laurent ring) a scalar lives in.
class Field {
public:
    enum class Base : std::uint8_t { rational, prime };

    static Field rationals() noexcept { return Field(Base::rational, 0, false); }
    /// Rejects 2 and composite moduli. Moduli must be below 2^31.
    static Field prime(std::uint64_t p);
    /// Accepts "Q", "F<p>", and either followed by "((e))".
    static Field parse(std::string_view name);

    Field laurent() const noexcept { return Field(base_, p_, true); }
    Field base_field() const noexcept { return Field(base_, p_, false); }

    Base base() const noexcept { return base_; }
    bool is_laurent() const noexcept { return laurent_; }
    bool is_rational() const noexcept { return base_ == Base::rational; }
    /// 0 for the rationals.
    std::uint64_t characteristic() const noexcept { return p_; }
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(Base b, std::uint64_t p, bool laurent) noexcept : base_(b), p_(p), laurent_(laurent) {}

    Base base_;
    std::uint64_t p_;
    bool laurent_;
};

/// Guard for characteristic-sensitive algorithms: passes in
/// characteristic 0 or when p > 2 * max_degree.
void require_characteristic_above(const Field& field, int max_degree);

/// Sentinel returned by FieldElem::valuation() for the zero element.
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

/// One exact scalar together with the field it belongs to.
class FieldElem {
public:
    /// Zero of the rationals.
    FieldElem() : field_(Field::rationals()), base_(mpq_class(0)) {}

    static FieldElem zero(const Field& f);
    static FieldElem one(const Field& f);
    static FieldElem from_int(const Field& f, long long v);
    /// Maps a rational into f (reducing mod p when needed). Laurent fields get a constant.
    static FieldElem from_rational(const Field& f, const mpq_class& v);
    /// c * e^exponent, where c is an element of the base field of laurent_field.
    static FieldElem laurent_monomial(const Field& laurent_field, int exponent, const FieldElem& c);

    const Field& field() const noexcept { return field_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem& operator/=(const FieldElem& o);

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    /// Laurent elements are invertible only when they are single monomials.
    FieldElem inverse() const;
    FieldElem pow(long long exponent) const;

    /// Square test in the base field (Q or F_p only).
    bool is_square() const;
    /// A square root in the base field, if one exists.
    std::optional<FieldElem> sqrt() const;

    // Base-field accessors.
    const mpq_class& rational() const;
    std::uint64_t residue() const;

    // Laurent accessors.
    /// Minimum exponent with a nonzero coefficient; kInfiniteValuation for zero.
    int valuation() const;
    /// Coefficient of e^exponent, as a base-field element.
    FieldElem laurent_coeff(int exponent) const;
    std::vector<std::pair<int, FieldElem>> laurent_terms() const;
    /// Multiplies a Laurent element by e^shift.
    FieldElem shift(int shift) const;
    /// Embeds a base-field element into the Laurent ring over it.
    FieldElem to_laurent() const;

    /// Canonical string: "3/4", "-2", "e^-2*5+e*3", ...
    std::string to_string() const;

private:
    using BaseValue = std::variant<std::uint64_t, mpq_class>;

    FieldElem(Field f, BaseValue v) : field_(f), base_(std::move(v)) {}

    static BaseValue base_add(const Field& f, const BaseValue& a, const BaseValue& b);
    static BaseValue base_mul(const Field& f, const BaseValue& a, const BaseValue& b);
    static BaseValue base_neg(const Field& f, const BaseValue& a);
    static bool base_is_zero(const BaseValue& a);
    void check_same(const FieldElem& o) const;
    void require_base(const char* op) const;
    void require_laurent(const char* op) const;

    Field field_;
    BaseValue base_;                                  // base-field value
    std::vector<std::pair<int, BaseValue>> terms_;    // Laurent support, sorted, nonzero
};

/// Modular exponentiation helper shared with the polynomial layer.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

}  // namespace hyperjac
