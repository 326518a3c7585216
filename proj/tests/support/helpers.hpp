#pragma once

#include <string>

#include "hyperjac/hirzebruch.hpp"
#include "hyperjac/lbqf.hpp"
#include "hyperjac/limits.hpp"
#include "hyperjac/parse.hpp"

namespace testing_support {

using namespace hyperjac;

inline Field Q() { return Field::rationals(); }
inline Field F(std::uint64_t p) { return Field::prime(p); }
inline Field Qe() { return Field::rationals().laurent(); }

inline BinForm form(const std::string& text, const Field& field = Field::rationals()) {
    return parse_form(text, field);
}
inline BinForm form(const std::string& text, int slot, const Field& field = Field::rationals()) {
    return parse_form(text, field, slot);
}
inline FieldElem num(const std::string& text, const Field& field = Field::rationals()) {
    return parse_scalar(text, field);
}

inline Lbqf lbqf(int i, int j, int k, const std::string& a, const std::string& b, const std::string& c,
                 const Field& field = Field::rationals()) {
    StratumIndex idx{i, j, k};
    return Lbqf(idx, parse_form(a, field, idx.slot_a(), "a"), parse_form(b, field, idx.slot_b(), "b"),
                parse_form(c, field, idx.slot_c(), "c"));
}

}  // namespace testing_support
