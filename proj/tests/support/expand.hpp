#pragma once

// A naive polynomial engine in s, t, x, y over any scalars field, used to
// check the automorphism action by direct expansion.

#include <array>
#include <map>

#include "hyperjac/lbqf.hpp"

namespace testing_support {

class Poly4 {
public:
    using Key = std::array<int, 4>;  // exponents of s, t, x, y

    explicit Poly4(const hyperjac::Field& f) : field_(f) {}
    static Poly4 from_form(const hyperjac::BinForm& f, int x_exp, int y_exp);

    Poly4 operator+(const Poly4& o) const;
    Poly4 operator*(const Poly4& o) const;
    Poly4 scaled(const hyperjac::FieldElem& c) const;

    /// The coefficient of x^xe y^ye as a form of the given slot.
    hyperjac::BinForm coefficient(int xe, int ye, int slot) const;

private:
    hyperjac::Field field_;
    std::map<Key, hyperjac::FieldElem> terms_;
};

/// lambda * p(r x + u y, v x + w y), re-extracted as (a, b, c).
hyperjac::Lbqf expand_substitution(const hyperjac::Lbqf& l, const hyperjac::Automorphism& phi);

}  // namespace testing_support
