#include "hyperjac/binforms.hpp"

#include <algorithm>
#include <map>

#include "upoly.hpp"

namespace hyperjac {

// ---------------------------------------------------------------- ProjPoint

ProjPoint::ProjPoint(FieldElem s0, FieldElem t0) : s0_(std::move(s0)), t0_(std::move(t0)) {
    if (!(s0_.field() == t0_.field())) throw FieldMismatchError("point coordinates in different fields");
    if (t0_.is_zero()) {
        if (s0_.is_zero()) throw PreconditionError("[0:0] is not a point of P^1");
        s0_ = FieldElem::one(s0_.field());
    } else {
        s0_ = s0_ / t0_;
        t0_ = FieldElem::one(t0_.field());
    }
}

std::string ProjPoint::to_string() const { return "[" + s0_.to_string() + ":" + t0_.to_string() + "]"; }

// ---------------------------------------------------------------- BinForm basics

BinForm::BinForm(const Field& field, int slot) : field_(field), slot_(slot) {
    coeffs_.assign(static_cast<std::size_t>(std::max(slot + 1, 0)), FieldElem::zero(field));
}

BinForm::BinForm(const Field& field, int slot, std::vector<FieldElem> coeffs)
    : field_(field), slot_(slot), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<std::size_t>(std::max(slot + 1, 0)))
        throw PreconditionError("form of slot " + std::to_string(slot) + " needs " +
                                std::to_string(std::max(slot + 1, 0)) + " coefficients");
    for (const auto& c : coeffs_)
        if (!(c.field() == field_)) throw FieldMismatchError("form coefficients in different fields");
}

BinForm BinForm::monomial(const Field& field, int s_exp, int t_exp, const FieldElem& c) {
    if (s_exp < 0 || t_exp < 0) throw PreconditionError("monomial exponents must be nonnegative");
    BinForm f(field, s_exp + t_exp);
    f.coeffs_[static_cast<std::size_t>(t_exp)] = c;
    return f;
}

BinForm BinForm::constant(const FieldElem& c) { return BinForm(c.field(), 0, {c}); }

bool BinForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FieldElem& c) { return c.is_zero(); });
}

int BinForm::t_order() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero()) return static_cast<int>(k);
    throw PreconditionError("t_order of the zero form");
}

FieldElem BinForm::leading_coeff() const { return coeffs_[static_cast<std::size_t>(t_order())]; }

BinForm BinForm::monic() const {
    if (is_zero()) return *this;
    FieldElem inv = leading_coeff().inverse();
    return inv * *this;
}

BinForm BinForm::operator-() const {
    BinForm out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

BinForm& BinForm::operator+=(const BinForm& o) {
    if (!(field_ == o.field_)) throw FieldMismatchError("adding forms over different fields");
    if (slot_ != o.slot_)
        throw PreconditionError("slot mismatch: " + std::to_string(slot_) + " vs " + std::to_string(o.slot_));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

BinForm& BinForm::operator-=(const BinForm& o) { return *this += -o; }

BinForm operator*(const BinForm& a, const BinForm& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatchError("multiplying forms over different fields");
    BinForm out(a.field_, a.slot_ + b.slot_);
    if (a.slot_ < 0 || b.slot_ < 0) return out;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

BinForm operator*(const FieldElem& c, const BinForm& f) {
    BinForm out = f;
    for (auto& x : out.coeffs_) x = c * x;
    return out;
}

bool operator==(const BinForm& a, const BinForm& b) {
    return a.field_ == b.field_ && a.slot_ == b.slot_ && a.coeffs_ == b.coeffs_;
}

BinForm BinForm::pow(int n) const {
    if (n < 0) throw PreconditionError("negative power of a form");
    BinForm result = BinForm::constant(FieldElem::one(field_));
    for (int i = 0; i < n; ++i) result = result * *this;
    return result;
}

BinForm BinForm::derivative_s() const {
    if (slot_ < 0) throw PreconditionError("derivative of a negative-slot form");
    if (slot_ == 0) return BinForm(field_, -1);
    BinForm out(field_, slot_ - 1);
    for (int k = 0; k < slot_; ++k)
        out.coeffs_[static_cast<std::size_t>(k)] = FieldElem::from_int(field_, slot_ - k) * coeffs_[static_cast<std::size_t>(k)];
    return out;
}

BinForm BinForm::derivative_t() const {
    if (slot_ < 0) throw PreconditionError("derivative of a negative-slot form");
    if (slot_ == 0) return BinForm(field_, -1);
    BinForm out(field_, slot_ - 1);
    for (int k = 1; k <= slot_; ++k)
        out.coeffs_[static_cast<std::size_t>(k - 1)] = FieldElem::from_int(field_, k) * coeffs_[static_cast<std::size_t>(k)];
    return out;
}

FieldElem BinForm::eval(const ProjPoint& q) const {
    if (!(q.s0().field() == field_)) throw FieldMismatchError("evaluating at a point over another field");
    if (slot_ < 0) return FieldElem::zero(field_);
    if (q.is_infinity()) return coeffs_.front();
    // t0 = 1: sum c_k s0^(d-k), Horner from k = 0.
    FieldElem acc = FieldElem::zero(field_);
    for (const auto& c : coeffs_) acc = acc * q.s0() + c;
    return acc;
}

namespace {

std::string coeff_prefix(const FieldElem& c, bool bare_monomial) {
    std::string str = c.to_string();
    bool negative = !str.empty() && str.front() == '-';
    std::string mag = negative ? str.substr(1) : str;
    if (c.field().is_laurent() && mag.find_first_of("+-") != std::string::npos) {
        // Multi-term Laurent coefficients keep their own signs inside parentheses.
        return "(" + str + ")" + (bare_monomial ? "" : "*");
    }
    std::string sign = negative ? "-" : "";
    if (bare_monomial) return sign + mag;
    if (mag == "1") return sign;
    return sign + mag + "*";
}

}  // namespace

std::string BinForm::to_string() const {
    std::string out;
    for (int k = 0; k <= slot_; ++k) {
        const FieldElem& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        int se = slot_ - k;
        std::string mono;
        auto var = [&](const char* v, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        var("s", se);
        var("t", k);
        std::string term = coeff_prefix(c, mono.empty()) + mono;
        if (!out.empty() && term.front() != '-') out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- dehomogenization

namespace detail {

Dehom dehomogenize(const BinForm& f) {
    int m = f.t_order();
    int d = f.slot();
    std::vector<FieldElem> c(static_cast<std::size_t>(d - m + 1), FieldElem::zero(f.field()));
    for (int k = m; k <= d; ++k) c[static_cast<std::size_t>(d - k)] = f.coeff(k);
    return {m, UPoly(f.field(), std::move(c))};
}

BinForm homogenize(const UPoly& p, int slot) {
    if (p.degree() > slot) throw PreconditionError("homogenize: degree exceeds slot");
    BinForm out(p.field(), slot);
    std::vector<FieldElem> c(static_cast<std::size_t>(std::max(slot + 1, 0)), FieldElem::zero(p.field()));
    for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(slot - i)] = p.coeff(i);
    return BinForm(p.field(), slot, std::move(c));
}

BinForm t_power(const Field& f, int m) { return BinForm::monomial(f, 0, m, FieldElem::one(f)); }

}  // namespace detail

using detail::dehomogenize;
using detail::homogenize;
using detail::UPoly;

// ---------------------------------------------------------------- gcd / division

BinForm gcd(const BinForm& f, const BinForm& g) {
    if (!(f.field() == g.field())) throw FieldMismatchError("gcd of forms over different fields");
    if (f.field().is_laurent()) throw PreconditionError("gcd is defined over Q and F_p only");
    bool fz = f.is_zero();
    bool gz = g.is_zero();
    if (fz && gz) throw PreconditionError("gcd of two zero forms");
    if (fz) return g.monic();
    if (gz) return f.monic();
    auto [mf, pf] = dehomogenize(f);
    auto [mg, pg] = dehomogenize(g);
    UPoly h = detail::upoly_gcd(pf, pg);
    int m = std::min(mf, mg);
    return detail::t_power(f.field(), m) * homogenize(h, h.degree());
}

std::optional<BinForm> divide_exact(const BinForm& f, const BinForm& g) {
    if (!(f.field() == g.field())) throw FieldMismatchError("division of forms over different fields");
    if (g.is_zero()) throw DivisionByZeroError("division by the zero form");
    int slot = f.slot() - g.slot();
    if (f.is_zero()) return BinForm(f.field(), slot);
    if (slot < 0) return std::nullopt;
    auto [mf, pf] = dehomogenize(f);
    auto [mg, pg] = dehomogenize(g);
    if (mf < mg) return std::nullopt;
    auto [q, r] = detail::upoly_divmod(pf, pg);
    if (!r.is_zero()) return std::nullopt;
    BinForm out = detail::t_power(f.field(), mf - mg) * homogenize(q, slot - (mf - mg));
    return out;
}

// ---------------------------------------------------------------- resultant

namespace {

// Bareiss fraction-free elimination; every division is exact.
FieldElem bareiss_det(std::vector<std::vector<FieldElem>> m, const Field& field) {
    const std::size_t n = m.size();
    if (n == 0) return FieldElem::one(field);
    FieldElem sign = FieldElem::one(field);
    FieldElem prev = FieldElem::one(field);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return FieldElem::zero(field);
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = FieldElem::zero(field);
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

FieldElem sylvester_resultant(const BinForm& f, const BinForm& g) {
    const Field& field = f.field();
    int m = std::max(f.slot(), 0);
    int n = std::max(g.slot(), 0);
    if (f.slot() < 0 || g.slot() < 0) {
        // Negative slots only carry the zero form.
        return (m + n == 0 && f.slot() >= 0 && g.slot() >= 0) ? FieldElem::one(field) : FieldElem::zero(field);
    }
    const int size = m + n;
    std::vector<std::vector<FieldElem>> rows(static_cast<std::size_t>(size),
                                             std::vector<FieldElem>(static_cast<std::size_t>(size), FieldElem::zero(field)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = f.coeff(k);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) rows[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = g.coeff(k);
    return bareiss_det(std::move(rows), field);
}

}  // namespace

FieldElem resultant(const BinForm& f, const BinForm& g) {
    if (!(f.field() == g.field())) throw FieldMismatchError("resultant of forms over different fields");
    if (f.field().is_laurent()) throw PreconditionError("resultant is defined over Q and F_p only");
    if (f.is_zero() || g.is_zero()) throw PreconditionError("resultant of a zero form");
    return sylvester_resultant(f, g);
}

FieldElem disc_binform(const BinForm& f) {
    if (f.slot() < 1) throw PreconditionError("disc_binform needs slot degree >= 1");
    if (f.field().is_laurent()) throw PreconditionError("disc_binform is defined over Q and F_p only");
    if (f.is_zero()) return FieldElem::zero(f.field());
    return sylvester_resultant(f.derivative_s(), f.derivative_t());
}

// ---------------------------------------------------------------- squares

std::optional<BinForm> is_square(const BinForm& f) {
    const Field& field = f.field();
    if (field.is_laurent()) throw PreconditionError("is_square is defined over Q and F_p only");
    if (f.slot() % 2 != 0) return std::nullopt;
    int half = f.slot() / 2;
    if (f.is_zero()) return BinForm(field, half);
    int m = f.t_order();
    if (m % 2 != 0) return std::nullopt;
    // f = t^m * h with h(1,0) != 0; solve k^2 = h top-down in the s-degree.
    int hd = f.slot() - m;
    int kd = hd / 2;
    auto h = [&](int idx) -> const FieldElem& { return f.coeff(m + idx); };
    auto root = h(0).sqrt();
    if (!root) return std::nullopt;
    std::vector<FieldElem> k(static_cast<std::size_t>(kd + 1), FieldElem::zero(field));
    k[0] = *root;
    FieldElem two_k0_inv = (FieldElem::from_int(field, 2) * k[0]).inverse();
    for (int idx = 1; idx <= kd; ++idx) {
        FieldElem acc = h(idx);
        for (int i = 1; i < idx; ++i) acc -= k[static_cast<std::size_t>(i)] * k[static_cast<std::size_t>(idx - i)];
        k[static_cast<std::size_t>(idx)] = acc * two_k0_inv;
    }
    BinForm kform(field, kd, std::move(k));
    BinForm g = detail::t_power(field, m / 2) * kform;
    if (g * g != f) return std::nullopt;
    return g;
}

bool is_square_up_to_unit(const BinForm& f) {
    if (f.is_zero()) return true;
    SquarefreeDecomposition sq = squarefree_decomposition(f);
    return std::all_of(sq.factors.begin(), sq.factors.end(), [](const auto& fm) { return fm.second % 2 == 0; });
}

// ---------------------------------------------------------------- multiplicity

int multiplicity_at(const BinForm& f, const ProjPoint& q) {
    if (f.is_zero()) throw PreconditionError("multiplicity of the zero form");
    if (q.is_infinity()) return f.t_order();
    auto [m, p] = dehomogenize(f);
    (void)m;
    UPoly lin(f.field(), {-q.s0(), FieldElem::one(f.field())});
    int mult = 0;
    while (p.degree() >= 1) {
        auto [quo, rem] = detail::upoly_divmod(p, lin);
        if (!rem.is_zero()) break;
        p = std::move(quo);
        ++mult;
    }
    return mult;
}

// ---------------------------------------------------------------- squarefree decomposition

SquarefreeDecomposition squarefree_decomposition(const BinForm& f) {
    if (f.is_zero()) throw PreconditionError("squarefree decomposition of the zero form");
    if (f.field().is_laurent()) throw PreconditionError("squarefree decomposition needs Q or F_p");
    const Field& field = f.field();
    FieldElem unit = f.leading_coeff();
    auto [m, p] = dehomogenize(f.monic());
    std::map<int, UPoly> by_mult;
    for (auto& [fac, mult] : detail::upoly_squarefree(p)) {
        auto it = by_mult.find(mult);
        if (it == by_mult.end()) by_mult.emplace(mult, std::move(fac));
        else it->second = detail::upoly_mul(it->second, fac);
    }
    SquarefreeDecomposition out{unit, {}};
    // t is coprime to every finite factor, so it merges into the class of its multiplicity.
    std::map<int, BinForm> forms;
    for (auto& [mult, fac] : by_mult) forms.emplace(mult, homogenize(fac, fac.degree()));
    if (m > 0) {
        BinForm t = detail::t_power(field, 1);
        auto it = forms.find(m);
        if (it == forms.end()) forms.emplace(m, t);
        else it->second = it->second * t;
    }
    for (auto& [mult, form] : forms) out.factors.emplace_back(form, mult);
    return out;
}

std::vector<ProjPoint> rational_roots(const BinForm& f) {
    if (f.is_zero()) throw PreconditionError("roots of the zero form");
    auto [m, p] = dehomogenize(f);
    std::vector<ProjPoint> out;
    for (auto& r : detail::upoly_roots(p)) out.push_back(ProjPoint::affine(r));
    if (m > 0) out.push_back(ProjPoint::infinity(f.field()));
    return out;
}

}  // namespace hyperjac
