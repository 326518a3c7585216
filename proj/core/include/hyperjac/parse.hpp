#pragma once

// Expression grammar for forms and scalars:
//   expr   := ['-'|'+'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ['^' ['-'] integer]
//   atom   := integer | 's' | 't' | 'e' | '(' expr ')'
// Division and negative powers are allowed only by e-monomials with a
// rational coefficient (so "3/4" and "e^-2" parse, "1/s" does not).

#include <optional>
#include <string>
#include <string_view>

#include "hyperjac/binforms.hpp"

namespace hyperjac {

/// Parses a form over `field`. With a slot, every monomial must have total
/// s,t-degree equal to it; without one the slot is inferred (and "0" is rejected).
/// `name` labels slot-mismatch messages, e.g. "b".
BinForm parse_form(std::string_view text, const Field& field, std::optional<int> slot = std::nullopt,
                   std::string_view name = "form");

/// Parses a scalar (no s or t); e is allowed only over Laurent fields.
FieldElem parse_scalar(std::string_view text, const Field& field);

/// "[s0:t0]", or a bare scalar s0 meaning [s0:1].
ProjPoint parse_point(std::string_view text, const Field& field);

}  // namespace hyperjac
