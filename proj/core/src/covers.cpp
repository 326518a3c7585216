#include "hyperjac/covers.hpp"

#include <algorithm>

namespace hyperjac {

Cover::Cover(int genus, BinForm section) : g(genus), sigma(std::move(section)) {
    if (sigma.slot() != 2 * g + 2)
        throw PreconditionError("cover of genus " + std::to_string(g) + " needs sigma of slot " +
                                std::to_string(2 * g + 2) + ", got " + std::to_string(sigma.slot()));
}

bool squarefree_over_closure(const BinForm& f) {
    if (f.is_zero()) return false;
    const int d = f.slot();
    if (d == 0) return true;
    const std::uint64_t p = f.field().characteristic();
    if (p == 0 || d % static_cast<int>(p) != 0) return !disc_binform(f).is_zero();
    // Euler's relation degenerates; a repeated root is a common root of F, F_s, F_t.
    BinForm fs = f.derivative_s();
    BinForm ft = f.derivative_t();
    BinForm h = f;
    if (!fs.is_zero()) h = gcd(h, fs);
    if (!ft.is_zero()) h = gcd(h, ft);
    return h.slot() == 0;
}

CoverClassification classify_section(const BinForm& sigma) {
    CoverClassification out{false, false, false};
    if (sigma.slot() < 0 || sigma.is_zero()) return out;
    out.reduced = true;
    out.integral = !is_square(sigma).has_value();
    out.smooth = squarefree_over_closure(sigma);
    return out;
}

CoverClassification classify_cover(const Cover& x) { return classify_section(x.sigma); }

std::vector<RamificationFactor> ramification(const Cover& x) {
    if (x.sigma.is_zero()) throw PreconditionError("ramification of the zero section");
    std::vector<RamificationFactor> finite;
    std::vector<RamificationFactor> at_infinity;
    std::vector<RamificationFactor> opaque;
    const Field& field = x.sigma.field();
    for (const auto& [fac, mult] : squarefree_decomposition(x.sigma).factors) {
        BinForm rest = fac;
        for (const auto& q : rational_roots(fac)) {
            BinForm lin = q.is_infinity() ? BinForm::monomial(field, 0, 1, FieldElem::one(field))
                                          : BinForm(field, 1, {FieldElem::one(field), -q.s0()});
            rest = *divide_exact(rest, lin);
            (q.is_infinity() ? at_infinity : finite).push_back({lin, mult, q});
        }
        if (rest.slot() > 0) opaque.push_back({rest, mult, std::nullopt});
    }
    auto by_point = [](const RamificationFactor& a, const RamificationFactor& b) {
        const FieldElem& x0 = a.point->s0();
        const FieldElem& y0 = b.point->s0();
        return x0.field().is_rational() ? x0.rational() < y0.rational() : x0.residue() < y0.residue();
    };
    std::sort(finite.begin(), finite.end(), by_point);
    std::vector<RamificationFactor> out = std::move(finite);
    out.insert(out.end(), at_infinity.begin(), at_infinity.end());
    out.insert(out.end(), opaque.begin(), opaque.end());
    return out;
}

bool is_etale(const Cover& x) {
    if (x.sigma.is_zero()) return false;
    return x.sigma.slot() == 0;
}

}  // namespace hyperjac
