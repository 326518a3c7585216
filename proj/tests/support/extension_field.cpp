#include "extension_field.hpp"

#include <stdexcept>

namespace testing_support {

namespace {

using Poly = std::vector<std::uint32_t>;  // ascending, over F_p

// Remainder of a by monic b.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        std::uint64_t lead = a.back();
        if (lead != 0) {
            std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i)
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * b[i]) % p);
        }
        a.pop_back();
    }
    return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    const int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; d <= deg / 2; ++d) {
        // Every monic divisor candidate of degree d.
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g(static_cast<std::size_t>(d + 1), 0);
            std::uint64_t x = idx;
            for (int i = 0; i < d; ++i) {
                g[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(x % p);
                x /= p;
            }
            g[static_cast<std::size_t>(d)] = 1;
            Poly r = poly_rem(f, g, p);
            bool zero = true;
            for (auto c : r) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace

ExtField::ExtField(std::uint32_t p, int m) : p_(p), m_(m) {
    if (m < 1) throw std::invalid_argument("extension degree must be positive");
    std::uint64_t count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly f(static_cast<std::size_t>(m + 1), 0);
        std::uint64_t x = idx;
        for (int i = 0; i < m; ++i) {
            f[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(x % p);
            x /= p;
        }
        f[static_cast<std::size_t>(m)] = 1;
        if (is_irreducible(f, p)) {
            modulus_ = f;
            return;
        }
    }
    throw std::logic_error("no irreducible polynomial found");
}

std::uint64_t ExtField::size() const {
    std::uint64_t q = 1;
    for (int i = 0; i < m_; ++i) q *= p_;
    return q;
}

ExtField::Elem ExtField::from_base(std::uint32_t c) const {
    Elem e = zero();
    e[0] = c % p_;
    return e;
}

ExtField::Elem ExtField::nth(std::uint64_t index) const {
    Elem e = zero();
    for (int i = 0; i < m_; ++i) {
        e[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    return e;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
    Elem out = zero();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (a[i] + b[i]) % p_;
    return out;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
    Poly prod(static_cast<std::size_t>(2 * m_ - 1), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p_);
    }
    Poly r = poly_rem(prod, modulus_, p_);
    r.resize(static_cast<std::size_t>(m_), 0);
    return r;
}

bool ExtField::is_zero(const Elem& a) const {
    for (auto c : a)
        if (c != 0) return false;
    return true;
}

bool common_root_in_extensions(const std::vector<hyperjac::BinForm>& forms, int max_m) {
    if (forms.empty()) return true;
    const auto p = static_cast<std::uint32_t>(forms.front().field().characteristic());
    if (p == 0) throw std::invalid_argument("oracle needs forms over F_p");
    // [1:0] is rational: every form needs a zero s^d coefficient.
    bool at_infinity = true;
    for (const auto& f : forms) at_infinity = at_infinity && (f.slot() >= 0 && f.coeff(0).is_zero());
    if (at_infinity) return true;
    for (int m = 1; m <= max_m; ++m) {
        ExtField fq(p, m);
        std::vector<std::vector<ExtField::Elem>> coeffs;
        for (const auto& f : forms) {
            std::vector<ExtField::Elem> c;
            for (const auto& x : f.coeffs()) c.push_back(fq.from_base(static_cast<std::uint32_t>(x.residue())));
            coeffs.push_back(std::move(c));
        }
        for (std::uint64_t idx = 0; idx < fq.size(); ++idx) {
            ExtField::Elem x = fq.nth(idx);
            bool all = true;
            for (const auto& c : coeffs) {
                ExtField::Elem acc = fq.zero();
                for (const auto& ck : c) acc = fq.add(fq.mul(acc, x), ck);
                if (!fq.is_zero(acc)) {
                    all = false;
                    break;
                }
            }
            if (all) return true;
        }
    }
    return false;
}

}  // namespace testing_support
