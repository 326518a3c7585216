#include "hyperjac/hirzebruch.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperjac {

SurfaceCtx::SurfaceCtx(int i_, int j_) : i(i_), j(j_) {
    if (i > j) throw PreconditionError("surface context needs i <= j");
}

SurfaceCtx SurfaceCtx::of(const StratumIndex& idx) { return {std::min(idx.i, idx.j), std::max(idx.i, idx.j)}; }

int pair(const SurfaceCtx& ctx, const DivClass& a, const DivClass& b) {
    return a.h * b.h * (-ctx.i - ctx.j) + a.h * b.v + a.v * b.h;
}

DivClass curve_class(const StratumIndex& idx) { return {2, idx.degree()}; }
DivClass curve_class(const Lbqf& l) { return curve_class(l.idx()); }
DivClass O_pi1_class(const SurfaceCtx& ctx) { return {1, ctx.i + ctx.j}; }
DivClass canonical_class(const SurfaceCtx& ctx) { return {-2, -(ctx.i + ctx.j) - 2}; }

int adjunction_genus(const SurfaceCtx& ctx, const DivClass& c) {
    DivClass k = canonical_class(ctx);
    int num = pair(ctx, c, {c.h + k.h, c.v + k.v});
    if (num % 2 != 0) throw std::logic_error("adjunction: odd C.(C+K)");
    return 1 + num / 2;
}

CoxFactor::CoxFactor(BinForm alpha_, BinForm beta_, int e_, const SurfaceCtx& ctx)
    : alpha(std::move(alpha_)), beta(std::move(beta_)), e(e_) {
    if (alpha.slot() != e - ctx.j || beta.slot() != e - ctx.i)
        throw PreconditionError("Cox factor of degree (1," + std::to_string(e) + ") needs slots " +
                                std::to_string(e - ctx.j) + " and " + std::to_string(e - ctx.i));
    if (alpha.is_zero() && beta.is_zero()) throw PreconditionError("Cox factor is zero");
}

std::string CoxFactor::to_string() const {
    std::string out;
    auto put = [&](const BinForm& f, const char* var) {
        if (f.is_zero()) return;
        if (!out.empty()) out += "+";
        std::string c = f.to_string();
        if (c == "1") out += var;
        else out += "(" + c + ")*" + var;
    };
    put(alpha, "x");
    put(beta, "y");
    return out;
}

Lbqf multiply_factors(const SurfaceCtx& ctx, const CoxFactor& p1, const CoxFactor& p2) {
    StratumIndex idx{ctx.i, ctx.j, p1.e + p2.e - 2 * ctx.i - 2 * ctx.j};
    return Lbqf(idx, p1.alpha * p2.alpha, p1.alpha * p2.beta + p1.beta * p2.alpha, p1.beta * p2.beta);
}

namespace {

// Square root through the squarefree decomposition, kept apart from is_square.
std::optional<BinForm> sqrt_by_decomposition(const BinForm& f) {
    SquarefreeDecomposition sq = squarefree_decomposition(f);
    auto unit_root = sq.unit.sqrt();
    if (!unit_root) return std::nullopt;
    BinForm root = BinForm::constant(*unit_root);
    for (const auto& [fac, mult] : sq.factors) {
        if (mult % 2 != 0) return std::nullopt;
        root = root * fac.pow(mult / 2);
    }
    if (root * root != f) throw std::logic_error("square root reconstruction failed");
    return root;
}

BinForm content_of(const BinForm& x, const BinForm& y) {
    if (x.is_zero()) return y.monic();
    if (y.is_zero()) return x.monic();
    return gcd(x, y);
}

}  // namespace

std::optional<std::pair<CoxFactor, CoxFactor>> split_quadratic(const Lbqf& l0) {
    const Lbqf l = canonicalize(l0).form;
    const SurfaceCtx ctx = SurfaceCtx::of(l.idx());
    const StratumIndex& idx = l.idx();
    const Field& field = l.field();
    BinForm disc = disc_form(l);
    if (disc.is_zero()) throw PreconditionError("factorization needs a reduced form");
    BinForm one = BinForm::constant(FieldElem::one(field));

    std::optional<std::pair<CoxFactor, CoxFactor>> out;
    if (l.a().is_zero()) {
        // p = y (b x + c y).
        out.emplace(CoxFactor(BinForm(field, idx.i - idx.j), one, idx.i, ctx),
                    CoxFactor(l.b(), l.c(), idx.i + idx.slot_c(), ctx));
    } else {
        auto q = sqrt_by_decomposition(disc);
        if (!q) return std::nullopt;
        BinForm two_a = FieldElem::from_int(field, 2) * l.a();
        BinForm beta1 = l.b() - *q;
        BinForm beta2 = l.b() + *q;
        // 4a p = (2a x + (b-q) y)(2a x + (b+q) y); strip contents, then restore p's content.
        BinForm g1 = content_of(two_a, beta1);
        BinForm g2 = content_of(two_a, beta2);
        BinForm h = content_of(content_of(l.a(), l.b()), l.c());
        BinForm alpha1 = h * *divide_exact(two_a, g1);
        BinForm b1 = h * *divide_exact(beta1, g1);
        BinForm alpha2 = *divide_exact(two_a, g2);
        BinForm b2 = *divide_exact(beta2, g2);
        // alpha1 alpha2 = kappa a for one scalar kappa.
        BinForm lead = alpha1 * alpha2;
        int t = l.a().t_order();
        FieldElem kappa = lead.coeff(t) / l.a().coeff(t);
        FieldElem inv = kappa.inverse();
        alpha1 = inv * alpha1;
        b1 = inv * b1;
        const int e1 = alpha1.slot() + ctx.j;
        const int e2 = alpha2.slot() + ctx.j;
        out.emplace(CoxFactor(alpha1, b1, e1, ctx), CoxFactor(alpha2, b2, e2, ctx));
    }
    // Make p1 monic in its first nonzero coefficient; the unit moves to p2.
    CoxFactor& p1 = out->first;
    CoxFactor& p2 = out->second;
    FieldElem u = p1.alpha.is_zero() ? p1.beta.leading_coeff() : p1.alpha.leading_coeff();
    FieldElem u_inv = u.inverse();
    p1.alpha = u_inv * p1.alpha;
    p1.beta = u_inv * p1.beta;
    p2.alpha = u * p2.alpha;
    p2.beta = u * p2.beta;
    Lbqf prod = multiply_factors(ctx, p1, p2);
    if (!(prod.a() == l.a() && prod.b() == l.b() && prod.c() == l.c()))
        throw std::logic_error("factorization does not reproduce p");
    return out;
}

std::optional<std::pair<CoxFactor, CoxFactor>> factor_if_reducible(const Lbqf& l) {
    Classification c = classify(l);
    if (!c.reduced) throw PreconditionError("factor_if_reducible needs a reduced form");
    if (!c.line_bundle) throw PreconditionError("factor_if_reducible needs M to be a line bundle");
    return split_quadratic(l);
}

Bidegree bidegree(const Lbqf& l) {
    auto f = factor_if_reducible(l);
    if (!f) throw PreconditionError("bidegree needs a reducible form");
    int e1 = f->first.e;
    int e2 = f->second.e;
    return {std::min(e1, e2), std::max(e1, e2)};
}

bool bidegree_bound_holds(int d1, int g, int n) { return 2 * d1 >= n - 2 * (g + 1); }

bool caporaso_check(int d1, int d2, int g, int n) {
    auto inside = [&](int d) { return n - (g + 1) <= 2 * d && 2 * d <= n + (g + 1); };
    return inside(d1) && inside(d2);
}

}  // namespace hyperjac
