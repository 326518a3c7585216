#include "hyperjac/lbqf.hpp"

#include <stdexcept>

#include "hyperjac/hirzebruch.hpp"
#include "hyperjac/random.hpp"

namespace hyperjac {

std::string StratumIndex::to_string() const {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

Lbqf::Lbqf(StratumIndex idx, BinForm a, BinForm b, BinForm c)
    : idx_(idx), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    auto check = [](const char* name, const BinForm& f, int slot) {
        if (f.slot() != slot)
            throw PreconditionError(std::string("slot ") + name + " expects degree " + std::to_string(slot) +
                                    ", got " + std::to_string(f.slot()));
    };
    check("a", a_, idx_.slot_a());
    check("b", b_, idx_.slot_b());
    check("c", c_, idx_.slot_c());
    if (!(a_.field() == b_.field()) || !(a_.field() == c_.field()))
        throw FieldMismatchError("coefficients of a form in different fields");
}

Lbqf Lbqf::zero(const Field& field, StratumIndex idx) {
    return Lbqf(idx, BinForm(field, idx.slot_a()), BinForm(field, idx.slot_b()), BinForm(field, idx.slot_c()));
}

std::string Lbqf::to_string() const {
    return idx_.to_string() + ": (" + a_.to_string() + ")x^2+(" + b_.to_string() + ")xy+(" + c_.to_string() + ")y^2";
}

Lbqf swap_orientation(const Lbqf& l) { return Lbqf(l.idx().swapped(), l.c(), l.b(), l.a()); }

Canonicalized canonicalize(const Lbqf& l) {
    if (l.idx().canonical()) return {l, false};
    return {swap_orientation(l), true};
}

Invariants invariants(const Lbqf& l) { return {l.g(), l.n()}; }

BinForm disc_form(const Lbqf& l) {
    return l.b() * l.b() - FieldElem::from_int(l.field(), 4) * (l.a() * l.c());
}

// ---------------------------------------------------------------- classification

void Classification::check_consistency(int disc_slot) const {
    auto fail = [](const char* what) { throw std::logic_error(std::string("inconsistent classification: ") + what); };
    if (integral && !reduced) fail("integral but not reduced");
    if (smooth && !reduced) fail("smooth but not reduced");
    if (smooth && !integral && disc_slot != 0) fail("smooth and reducible with a nonconstant discriminant");
    if (line_bundle && p_identically_zero) fail("zero form marked as a line bundle");
    if (line_bundle != (bad_fiber_factor && bad_fiber_factor->slot() == 0)) fail("line_bundle disagrees with the gcd");
    if (p_identically_zero && reduced) fail("zero form marked reduced");
}

bool Classification::same_verdicts(const Classification& o) const {
    return p_identically_zero == o.p_identically_zero && reduced == o.reduced && integral == o.integral &&
           smooth == o.smooth && line_bundle == o.line_bundle;
}

Classification classify(const Lbqf& l) {
    Classification out;
    out.p_identically_zero = l.is_zero();
    BinForm disc = disc_form(l);
    CoverClassification cc = classify_section(disc);
    out.reduced = cc.reduced;
    out.integral = cc.integral;
    out.smooth = cc.smooth;
    if (out.reduced && !out.integral) out.disc_sqrt = is_square(disc);
    if (!out.p_identically_zero) {
        std::optional<BinForm> h;
        for (const BinForm* f : {&l.a(), &l.b(), &l.c()}) {
            if (f->is_zero()) continue;
            h = h ? gcd(*h, *f) : f->monic();
        }
        out.bad_fiber_factor = h;
        out.line_bundle = h->slot() == 0;
        if (!out.line_bundle) out.bad_fibers = rational_roots(*h);
    }
    out.check_consistency(disc.slot());
    return out;
}

bool irreducibility_crosscheck(const Lbqf& l) {
    if (disc_form(l).is_zero()) throw PreconditionError("irreducibility needs a reduced form");
    return !split_quadratic(l).has_value();
}

// ---------------------------------------------------------------- automorphisms

Automorphism Automorphism::identity(const Field& field, const StratumIndex& idx) {
    return {FieldElem::one(field), BinForm(field, idx.j - idx.i), BinForm(field, idx.i - idx.j), FieldElem::one(field),
            FieldElem::one(field)};
}

FieldElem Automorphism::det() const {
    FieldElem d = r * w;
    if (u.slot() == 0 && v.slot() == 0) d -= u.coeff(0) * v.coeff(0);
    return d;
}

void Automorphism::validate(const StratumIndex& idx) const {
    if (u.slot() != idx.j - idx.i) throw PreconditionError("automorphism: u must have slot j-i");
    if (v.slot() != idx.i - idx.j) throw PreconditionError("automorphism: v must have slot i-j");
    if (lambda.is_zero()) throw PreconditionError("automorphism: lambda must be nonzero");
    if (det().is_zero()) throw PreconditionError("automorphism is not invertible");
}

namespace {

// A linear form X = cx*x + cy*y in the Cox ring, tracked by its coefficient forms.
struct Linear {
    BinForm cx;
    BinForm cy;
};

struct Quadratic {
    BinForm xx;
    BinForm xy;
    BinForm yy;
};

Quadratic times(const Linear& p, const Linear& q) {
    return {p.cx * q.cx, p.cx * q.cy + p.cy * q.cx, p.cy * q.cy};
}

}  // namespace

Lbqf apply_automorphism(const Lbqf& l, const Automorphism& phi) {
    phi.validate(l.idx());
    const Field& field = l.field();
    BinForm one = BinForm::constant(FieldElem::one(field));
    // p'(x, y) = lambda * p(X, Y) with X = r x + u y, Y = v x + w y.
    Linear x_img{phi.r * one, phi.u};
    Linear y_img{phi.v, phi.w * one};
    Quadratic xx = times(x_img, x_img);
    Quadratic xy = times(x_img, y_img);
    Quadratic yy = times(y_img, y_img);
    BinForm a = l.a() * xx.xx + l.b() * xy.xx + l.c() * yy.xx;
    BinForm b = l.a() * xx.xy + l.b() * xy.xy + l.c() * yy.xy;
    BinForm c = l.a() * xx.yy + l.b() * xy.yy + l.c() * yy.yy;
    return Lbqf(l.idx(), phi.lambda * a, phi.lambda * b, phi.lambda * c);
}

Automorphism random_automorphism(const Field& field, const StratumIndex& idx, std::uint64_t seed) {
    Rng rng(seed);
    for (;;) {
        Automorphism phi{random_nonzero_scalar(field, rng), random_binform(field, idx.j - idx.i, rng),
                         random_binform(field, idx.i - idx.j, rng), random_nonzero_scalar(field, rng),
                         random_nonzero_scalar(field, rng)};
        if (!phi.det().is_zero()) return phi;
    }
}

Lbqf twist(const Lbqf& l, int m) {
    const StratumIndex& x = l.idx();
    return Lbqf({x.i + m, x.j + m, x.k - 2 * m}, l.a(), l.b(), l.c());
}

bool in_Jbd(const Lbqf& l) { return 2 * std::min(l.idx().i, l.idx().j) + l.idx().k >= 0; }

// ---------------------------------------------------------------- multiplication tables

MultiplicationTable multiplication_table(const Lbqf& l) {
    const Field& f = l.field();
    FieldElem two = FieldElem::from_int(f, 2);
    return {-l.b(),
            -(l.a() * l.c()),
            -l.b(),
            -l.c(),
            l.a(),
            BinForm(f, l.b().slot()),
            disc_form(l),
            -l.b(),
            -(two * l.c()),
            two * l.a(),
            l.b()};
}

EvaluatedTable multiplication_table_at(const Lbqf& l, const ProjPoint& q) {
    MultiplicationTable t = multiplication_table(l);
    FieldElem a = l.a().eval(q);
    FieldElem b = l.b().eval(q);
    FieldElem c = l.c().eval(q);
    return {t.tau_sq_linear.eval(q), t.tau_sq_constant.eval(q), t.tau_x_x.eval(q), t.tau_x_y.eval(q),
            t.tau_y_x.eval(q),       t.tau_y_y.eval(q),         t.taup_sq.eval(q), t.taup_x_x.eval(q),
            t.taup_x_y.eval(q),      t.taup_y_x.eval(q),        t.taup_y_y.eval(q),
            a.is_zero() && b.is_zero() && c.is_zero()};
}

Cover forget_to_cover(const Lbqf& l) { return Cover(l.g(), disc_form(l)); }

// ---------------------------------------------------------------- strata

GenericPrediction generic_stratum_table(const StratumIndex& idx) {
    const int sum = idx.i + idx.j + idx.k;
    const bool bounded = 2 * std::min(idx.i, idx.j) + idx.k >= 0;
    const int top = 2 * std::max(idx.i, idx.j) + idx.k;
    GenericPrediction p{};
    p.reduced = sum >= 0;
    p.integral = sum >= 1 && bounded;
    p.smooth = (sum >= 1 && bounded) || sum == 0;
    p.line_bundle = (sum < 0 && top == 0) || sum >= 0;
    return p;
}

bool matches_generic(const Lbqf& l, const Classification& c, const GenericPrediction& pred) {
    bool geometric_integral = c.reduced && !is_square_up_to_unit(disc_form(l));
    return c.reduced == pred.reduced && geometric_integral == pred.integral && c.smooth == pred.smooth &&
           c.line_bundle == pred.line_bundle;
}

bool stratum_specializes(const StratumIndex& from, const StratumIndex& to) {
    if (from.k != to.k || from.i + from.j != to.i + to.j) return false;
    return to.i <= from.i;
}

// ---------------------------------------------------------------- locus equations

LocusEquations locus_equations(const StratumIndex& idx0, bool want_discdisc) {
    const StratumIndex idx = idx0.canonical() ? idx0 : idx0.swapped();
    const int da = idx.slot_a();
    const int db = idx.slot_b();
    const int dc = idx.slot_c();
    const int big_n = 2 * (idx.i + idx.j + idx.k);
    if (want_discdisc && big_n > kDiscDiscDegreeCap)
        throw PreconditionError("expanded disc(disc_p) is only emitted when 2(i+j+k) <= " +
                                std::to_string(kDiscDiscDegreeCap));
    LocusEquations out;
    for (auto [name, d] : {std::pair<char, int>{'a', da}, {'b', db}, {'c', dc}})
        for (int l = 0; l <= d; ++l) out.variables.push_back(std::string(1, name) + std::to_string(l));
    const std::size_t nv = out.variables.size();
    // Generic coefficient forms indexed by the power of s: name_l multiplies s^l t^(d-l).
    std::size_t next = 0;
    auto generic = [&](int d) {
        std::vector<SymPoly> f;
        for (int l = 0; l <= d; ++l) f.push_back(SymPoly::variable(nv, next++));
        return f;
    };
    auto fa = generic(da);
    auto fb = generic(db);
    auto fc = generic(dc);
    auto mul = [&](const std::vector<SymPoly>& f, const std::vector<SymPoly>& g) {
        std::vector<SymPoly> h;
        if (f.empty() || g.empty()) return h;
        h.assign(f.size() + g.size() - 1, SymPoly(nv));
        for (std::size_t x = 0; x < f.size(); ++x)
            for (std::size_t y = 0; y < g.size(); ++y) h[x + y] += f[x] * g[y];
        return h;
    };
    if (big_n >= 0) {
        out.d.assign(static_cast<std::size_t>(big_n + 1), SymPoly(nv));
        auto bb = mul(fb, fb);
        auto ac = mul(fa, fc);
        for (std::size_t l = 0; l < bb.size(); ++l) out.d[l] += bb[l];
        for (std::size_t l = 0; l < ac.size(); ++l) out.d[l] -= mpz_class(4) * ac[l];
    }
    if (!want_discdisc || big_n < 1) return out;

    // F = sum d_l s^l t^(N-l); F_s has s^m t^(N-1-m) coefficient (m+1) d_(m+1),
    // F_t has (N-m) d_m. Sylvester rows list coefficients from s^(N-1) down.
    const auto nd = static_cast<std::size_t>(big_n + 1);
    auto dvar = [&](int l) { return SymPoly::variable(nd, static_cast<std::size_t>(l)); };
    std::vector<SymPoly> fs;
    std::vector<SymPoly> ft;
    for (int m = big_n - 1; m >= 0; --m) {
        fs.push_back(mpz_class(m + 1) * dvar(m + 1));
        ft.push_back(mpz_class(big_n - m) * dvar(m));
    }
    const int deg = big_n - 1;
    const auto size = static_cast<std::size_t>(2 * deg);
    std::vector<std::vector<SymPoly>> syl(size, std::vector<SymPoly>(size, SymPoly(nd)));
    for (int r = 0; r < deg; ++r)
        for (int kk = 0; kk <= deg; ++kk) {
            syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + kk)] = fs[static_cast<std::size_t>(kk)];
            syl[static_cast<std::size_t>(deg + r)][static_cast<std::size_t>(r + kk)] = ft[static_cast<std::size_t>(kk)];
        }
    SymPoly dd = size == 0 ? SymPoly::constant(nd, 1) : symbolic_determinant(syl, nd);
    out.discdisc_in_d = dd;
    if (big_n <= kDiscDiscExpandCap) out.discdisc_in_coeffs = dd.substitute(out.d);
    return out;
}

// ---------------------------------------------------------------- sampling

Lbqf random_form(const StratumIndex& idx, const Field& field, std::uint64_t seed) {
    Rng rng(seed);
    BinForm a = random_binform(field, idx.slot_a(), rng);
    BinForm b = random_binform(field, idx.slot_b(), rng);
    BinForm c = random_binform(field, idx.slot_c(), rng);
    return Lbqf(idx, std::move(a), std::move(b), std::move(c));
}

}  // namespace hyperjac
