#include "upoly.hpp"

#include <algorithm>
#include <random>

namespace hyperjac::detail {

UPoly::UPoly(const Field& f, std::vector<FieldElem> c) : field_(f), c_(std::move(c)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElem UPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return FieldElem::zero(field_);
    return c_[static_cast<std::size_t>(i)];
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    FieldElem inv = lead().inverse();
    std::vector<FieldElem> c = c_;
    for (auto& x : c) x *= inv;
    return UPoly(field_, std::move(c));
}

UPoly UPoly::derivative() const {
    std::vector<FieldElem> c;
    for (int i = 1; i <= degree(); ++i) c.push_back(FieldElem::from_int(field_, i) * c_[static_cast<std::size_t>(i)]);
    return UPoly(field_, std::move(c));
}

FieldElem UPoly::eval(const FieldElem& x) const {
    FieldElem acc = FieldElem::zero(field_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

bool UPoly::is_one() const { return degree() == 0 && c_[0].is_one(); }

UPoly upoly_add(const UPoly& a, const UPoly& b) {
    int n = std::max(a.degree(), b.degree());
    std::vector<FieldElem> c;
    for (int i = 0; i <= n; ++i) c.push_back(a.coeff(i) + b.coeff(i));
    return UPoly(a.field(), std::move(c));
}

UPoly upoly_sub(const UPoly& a, const UPoly& b) {
    int n = std::max(a.degree(), b.degree());
    std::vector<FieldElem> c;
    for (int i = 0; i <= n; ++i) c.push_back(a.coeff(i) - b.coeff(i));
    return UPoly(a.field(), std::move(c));
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly(a.field());
    std::vector<FieldElem> c(static_cast<std::size_t>(a.degree() + b.degree() + 1), FieldElem::zero(a.field()));
    for (int i = 0; i <= a.degree(); ++i) {
        const FieldElem& ai = a.coeffs()[static_cast<std::size_t>(i)];
        if (ai.is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j) c[static_cast<std::size_t>(i + j)] += ai * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return UPoly(a.field(), std::move(c));
}

std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    std::vector<FieldElem> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UPoly(a.field()), a};
    std::vector<FieldElem> q(static_cast<std::size_t>(a.degree() - db + 1), FieldElem::zero(a.field()));
    FieldElem inv = b.lead().inverse();
    for (int k = a.degree(); k >= db; --k) {
        FieldElem coef = r[static_cast<std::size_t>(k)] * inv;
        if (coef.is_zero()) continue;
        q[static_cast<std::size_t>(k - db)] = coef;
        for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= coef * b.coeffs()[static_cast<std::size_t>(i)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {UPoly(a.field(), std::move(q)), UPoly(a.field(), std::move(r))};
}

UPoly upoly_mod(const UPoly& a, const UPoly& b) { return upoly_divmod(a, b).second; }

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a.monic();
    UPoly y = b.monic();
    while (!y.is_zero()) {
        UPoly r = upoly_mod(x, y).monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

namespace {

UPoly exact_div(const UPoly& a, const UPoly& b) { return upoly_divmod(a, b).first; }

// f(x) = g(x^p) over F_p; returns g (Frobenius is the identity on F_p).
UPoly pth_root(const UPoly& f) {
    auto p = static_cast<int>(f.field().characteristic());
    std::vector<FieldElem> c;
    for (int i = 0; i <= f.degree(); i += p) c.push_back(f.coeff(i));
    return UPoly(f.field(), std::move(c));
}

UPoly powmod(UPoly base, std::uint64_t e, const UPoly& m) {
    UPoly result(base.field(), {FieldElem::one(base.field())});
    base = upoly_mod(base, m);
    while (e > 0) {
        if (e & 1U) result = upoly_mod(upoly_mul(result, base), m);
        base = upoly_mod(upoly_mul(base, base), m);
        e >>= 1U;
    }
    return result;
}

// Splits a monic squarefree product of distinct linear factors over F_p.
void split_linear(const UPoly& f, std::mt19937_64& rng, std::vector<FieldElem>& out) {
    const Field& field = f.field();
    if (f.degree() <= 0) return;
    if (f.degree() == 1) {
        out.push_back(-f.coeff(0));
        return;
    }
    const std::uint64_t p = field.characteristic();
    for (;;) {
        auto a = static_cast<long long>(rng() % p);
        UPoly shift(field, {FieldElem::from_int(field, a), FieldElem::one(field)});
        UPoly h = upoly_sub(powmod(shift, (p - 1) / 2, f), UPoly(field, {FieldElem::one(field)}));
        UPoly g = upoly_gcd(f, h);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            split_linear(g, rng, out);
            split_linear(exact_div(f, g), rng, out);
            return;
        }
    }
}

std::vector<mpz_class> divisors(mpz_class n) {
    if (n < 0) n = -n;
    // Trial-divide the small part; a remaining cofactor must be prime to stay exact.
    std::vector<std::pair<mpz_class, int>> primes;
    for (mpz_class d = 2; d * d <= n && d < 1000000; ++d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0) primes.emplace_back(d, e);
    }
    if (n > 1) {
        if (n >= mpz_class(1000000) * 1000000 && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
            throw UnsupportedError("rational root search: coefficient too large to factor");
        primes.emplace_back(n, 1);
    }
    std::vector<mpz_class> out{1};
    for (const auto& [pr, e] : primes) {
        std::size_t base_count = out.size();
        mpz_class pw = 1;
        for (int k = 1; k <= e; ++k) {
            pw *= pr;
            for (std::size_t i = 0; i < base_count; ++i) out.push_back(out[i] * pw);
        }
    }
    return out;
}

std::vector<FieldElem> rational_roots_q(const UPoly& f) {
    const Field& field = f.field();
    std::vector<FieldElem> out;
    int low = 0;
    while (f.coeff(low).is_zero()) ++low;
    if (low > 0) out.push_back(FieldElem::zero(field));
    // Clear denominators on f / x^low.
    mpz_class denom_lcm = 1;
    for (int i = low; i <= f.degree(); ++i) {
        mpz_class d = f.coeff(i).rational().get_den();
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), d.get_mpz_t());
    }
    if (f.degree() - low >= 1) {
        mpq_class a0 = f.coeff(low).rational() * denom_lcm;
        mpq_class an = f.lead().rational() * denom_lcm;
        auto ps = divisors(a0.get_num());
        auto qs = divisors(an.get_num());
        for (const auto& pd : ps)
            for (const auto& qd : qs)
                for (int sign : {1, -1}) {
                    mpq_class cand(pd * sign, qd);
                    cand.canonicalize();
                    FieldElem x = FieldElem::from_rational(field, cand);
                    if (f.eval(x).is_zero() && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
                }
    }
    std::sort(out.begin(), out.end(), [](const FieldElem& a, const FieldElem& b) { return a.rational() < b.rational(); });
    return out;
}

std::vector<FieldElem> roots_fp(const UPoly& f) {
    const Field& field = f.field();
    const std::uint64_t p = field.characteristic();
    std::vector<FieldElem> out;
    if (p <= 4096) {
        for (std::uint64_t a = 0; a < p; ++a) {
            FieldElem x = FieldElem::from_int(field, static_cast<long long>(a));
            if (f.eval(x).is_zero()) out.push_back(x);
        }
        return out;
    }
    UPoly m = f.monic();
    UPoly x(field, {FieldElem::zero(field), FieldElem::one(field)});
    UPoly g = upoly_gcd(m, upoly_sub(powmod(x, p, m), x));
    std::mt19937_64 rng(0x5eedULL);
    split_linear(g, rng, out);
    std::sort(out.begin(), out.end(), [](const FieldElem& a, const FieldElem& b) { return a.residue() < b.residue(); });
    return out;
}

}  // namespace

std::vector<std::pair<UPoly, int>> upoly_squarefree(const UPoly& f0) {
    std::vector<std::pair<UPoly, int>> result;
    UPoly f = f0.monic();
    if (f.degree() <= 0) return result;
    UPoly c = upoly_gcd(f, f.derivative());
    if (c.is_zero()) c = f;
    UPoly w = exact_div(f, c);
    int i = 1;
    while (w.degree() > 0) {
        UPoly y = upoly_gcd(w, c);
        UPoly z = exact_div(w, y);
        if (z.degree() > 0) result.emplace_back(z, i);
        ++i;
        w = y;
        c = exact_div(c, y);
    }
    if (c.degree() > 0) {
        // Only reachable in characteristic p: c is a polynomial in x^p.
        auto p = static_cast<int>(f.field().characteristic());
        for (auto& [g, m] : upoly_squarefree(pth_root(c))) result.emplace_back(g, m * p);
    }
    return result;
}

std::vector<FieldElem> upoly_roots(const UPoly& f) {
    if (f.is_zero()) throw PreconditionError("roots of the zero polynomial");
    if (f.degree() == 0) return {};
    if (f.field().is_laurent()) throw PreconditionError("root finding needs Q or F_p");
    if (f.field().is_rational()) return rational_roots_q(f);
    return roots_fp(f);
}

}  // namespace hyperjac::detail
