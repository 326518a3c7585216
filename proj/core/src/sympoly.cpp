#include "hyperjac/sympoly.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace hyperjac {

SymPoly SymPoly::constant(std::size_t nvars, const mpz_class& c) {
    SymPoly p(nvars);
    if (c != 0) p.terms_[Exponents(nvars, 0)] = c;
    return p;
}

SymPoly SymPoly::variable(std::size_t nvars, std::size_t index) {
    SymPoly p(nvars);
    Exponents e(nvars, 0);
    e.at(index) = 1;
    p.terms_[e] = 1;
    return p;
}

int SymPoly::degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int x : e) d += x;
        best = std::max(best, d);
    }
    return best;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto& slot = terms_[e];
        slot += c;
        if (slot == 0) terms_.erase(e);
    }
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto& slot = terms_[e];
        slot -= c;
        if (slot == 0) terms_.erase(e);
    }
    return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    SymPoly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            SymPoly::Exponents e(a.nvars_);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto& slot = out.terms_[e];
            slot += ca * cb;
            if (slot == 0) out.terms_.erase(e);
        }
    return out;
}

SymPoly operator*(const mpz_class& c, const SymPoly& p) {
    SymPoly out(p.nvars_);
    if (c == 0) return out;
    for (const auto& [e, x] : p.terms_) out.terms_[e] = c * x;
    return out;
}

SymPoly SymPoly::substitute(const std::vector<SymPoly>& values) const {
    if (values.size() != nvars_) throw std::invalid_argument("substitute: wrong number of values");
    std::size_t target = values.empty() ? 0 : values.front().nvars();
    SymPoly out(target);
    for (const auto& [e, c] : terms_) {
        SymPoly term = constant(target, c);
        for (std::size_t i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) term = term * values[i];
        out += term;
    }
    return out;
}

std::string SymPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names.at(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        mpz_class mag = abs(c);
        std::string term;
        if (mono.empty()) term = mag.get_str();
        else if (mag == 1) term = mono;
        else term = mag.get_str() + "*" + mono;
        if (c < 0) out += "-";
        else if (!out.empty()) out += "+";
        out += term;
    }
    return out;
}

SymPoly symbolic_determinant(const std::vector<std::vector<SymPoly>>& m, std::size_t nvars) {
    const std::size_t n = m.size();
    if (n == 0) return SymPoly::constant(nvars, 1);
    if (n > 20) throw std::invalid_argument("symbolic_determinant: matrix too large");
    // minors[mask] = det of the rows n-popcount(mask).. restricted to columns in mask.
    std::unordered_map<std::uint32_t, SymPoly> minors;
    minors.emplace(0U, SymPoly::constant(nvars, 1));
    for (std::size_t size = 1; size <= n; ++size) {
        std::size_t row = n - size;
        std::unordered_map<std::uint32_t, SymPoly> next;
        for (const auto& [mask, prev] : minors) {
            if (prev.is_zero()) continue;
            for (std::size_t col = 0; col < n; ++col) {
                std::uint32_t bit = 1U << col;
                if (mask & bit) continue;
                if (!m[row][col].is_zero()) {
                    SymPoly term = m[row][col] * prev;
                    // Sign from the position of col among the chosen columns.
                    if (std::popcount(mask & (bit - 1U)) % 2 != 0) term = mpz_class(-1) * term;
                    auto [it, fresh] = next.try_emplace(mask | bit, SymPoly(nvars));
                    it->second += term;
                }
            }
        }
        minors = std::move(next);
    }
    auto it = minors.find((1U << n) - 1U);
    return it == minors.end() ? SymPoly(nvars) : it->second;
}

}  // namespace hyperjac
