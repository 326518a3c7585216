#include "hyperjac/limits.hpp"

#include <algorithm>

namespace hyperjac {

namespace {

void require_family(const Lbqf& f) {
    if (!f.field().is_laurent()) throw PreconditionError("a family needs coefficients in a Laurent field");
}

int form_valuation(const BinForm& f) {
    int v = kInfiniteValuation;
    for (const auto& c : f.coeffs()) v = std::min(v, c.valuation());
    return v;
}

BinForm shift_form(const BinForm& f, int m) {
    return f.map_coeffs(f.field(), [m](const FieldElem& c) { return c.shift(m); });
}

BinForm at_zero(const BinForm& f) {
    Field base = f.field().base_field();
    return f.map_coeffs(base, [](const FieldElem& c) {
        if (c.valuation() < 0) throw PreconditionError("negative valuation at e = 0");
        return c.laurent_coeff(0);
    });
}

}  // namespace

int family_valuation(const Lbqf& family) {
    require_family(family);
    if (family.is_zero()) throw PreconditionError("the family is identically zero");
    return std::min({form_valuation(family.a()), form_valuation(family.b()), form_valuation(family.c())});
}

Lbqf specialize_at_zero(const Lbqf& family) {
    require_family(family);
    return Lbqf(family.idx(), at_zero(family.a()), at_zero(family.b()), at_zero(family.c()));
}

Specialization clear_and_specialize(const Lbqf& family) {
    int v = family_valuation(family);
    Lbqf cleared(family.idx(), shift_form(family.a(), -v), shift_form(family.b(), -v), shift_form(family.c(), -v));
    return {v, specialize_at_zero(cleared)};
}

Lbqf weighted_specialize(const Lbqf& family, int m1, int m2, int mL) {
    require_family(family);
    Lbqf scaled(family.idx(), shift_form(family.a(), 2 * m1 + mL), shift_form(family.b(), m1 + m2 + mL),
                shift_form(family.c(), 2 * m2 + mL));
    if (!scaled.is_zero() && family_valuation(scaled) < 0)
        throw PreconditionError("weights leave a negative valuation");
    Lbqf limit = specialize_at_zero(scaled);
    if (limit.is_zero()) throw PreconditionError("weights specialize the family to zero");
    return limit;
}

LimitReport classify_limit(const Lbqf& family) {
    Specialization sp = clear_and_specialize(family);
    Classification cls = classify(sp.limit);
    BinForm disc = disc_form(sp.limit);
    LimitReport out{sp.v, sp.limit, cls, disc, {}, std::nullopt};
    if (!disc.is_zero()) out.ramification = ramification(Cover(sp.limit.g(), disc));
    if (cls.reduced && !cls.integral && cls.line_bundle) out.bidegree = bidegree(sp.limit);
    return out;
}

}  // namespace hyperjac
