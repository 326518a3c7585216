#pragma once

// Multivariate polynomials with integer coefficients over a fixed, named
// variable list. Used to emit symbolic locus equations.

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hyperjac {

class SymPoly {
public:
    using Exponents = std::vector<int>;

    explicit SymPoly(std::size_t nvars = 0) : nvars_(nvars) {}
    static SymPoly constant(std::size_t nvars, const mpz_class& c);
    static SymPoly variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const noexcept { return nvars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<Exponents, mpz_class>& terms() const noexcept { return terms_; }
    /// Total degree; -1 for zero.
    int degree() const;

    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator*(const mpz_class& c, const SymPoly& p);
    friend bool operator==(const SymPoly&, const SymPoly&) = default;

    /// Substitutes polynomials (over a common variable list) for each variable.
    SymPoly substitute(const std::vector<SymPoly>& values) const;

    /// Terms in decreasing lexicographic exponent order, e.g. "-4*a0*c0+b0^2".
    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::size_t nvars_;
    std::map<Exponents, mpz_class> terms_;
};

/// Determinant by expansion along rows with memoized column subsets.
/// Division free, so it works for any commutative coefficients.
SymPoly symbolic_determinant(const std::vector<std::vector<SymPoly>>& m, std::size_t nvars);

}  // namespace hyperjac
