#include <doctest.h>

#include "criteria.hpp"
#include "extension_field.hpp"
#include "helpers.hpp"
#include "hyperjac/random.hpp"
#include "hyperjac/sympoly.hpp"

using namespace testing_support;

TEST_CASE("acceptance criteria at reduced size") {
    CriteriaSizes small{20, 60, 40, 200};
    for (const auto& r : run_all_criteria(small)) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.passed);
    }
}

TEST_CASE("resultant agrees with the symbolic Sylvester determinant") {
    // Res of generic forms of degrees 2 and 3, expanded symbolically, then evaluated.
    const int m = 2, n = 3;
    const std::size_t nv = m + n + 2;
    std::vector<std::vector<SymPoly>> syl(m + n, std::vector<SymPoly>(m + n, SymPoly(nv)));
    for (int r = 0; r < n; ++r)
        for (int q = 0; q <= m; ++q) syl[r][r + q] = SymPoly::variable(nv, q);
    for (int r = 0; r < m; ++r)
        for (int q = 0; q <= n; ++q) syl[n + r][r + q] = SymPoly::variable(nv, m + 1 + q);
    SymPoly res = symbolic_determinant(syl, nv);
    CHECK(res.degree() == m + n);
    Rng rng(31);
    for (const Field& f : {Q(), F(7), F(101)}) {
        for (int trial = 0; trial < 50; ++trial) {
            BinForm a = random_binform(f, m, rng);
            BinForm b = random_binform(f, n, rng);
            FieldElem val = FieldElem::zero(f);
            for (const auto& [ex, c] : res.terms()) {
                FieldElem term = FieldElem::from_rational(f, mpq_class(c));
                for (std::size_t x = 0; x < ex.size(); ++x) {
                    const FieldElem& v = x <= static_cast<std::size_t>(m) ? a.coeff(static_cast<int>(x))
                                                                           : b.coeff(static_cast<int>(x) - m - 1);
                    term = term * v.pow(ex[x]);
                }
                val += term;
            }
            CHECK(val == resultant(a, b));
        }
    }
}

TEST_CASE("line-bundle verdicts against extension-field search") {
    std::uint64_t seed = 1;
    for (std::uint64_t p : {3ULL, 11ULL}) {
        for (const StratumIndex idx : {StratumIndex{0, 0, 2}, StratumIndex{0, 1, 1}, StratumIndex{1, 1, 0}}) {
            for (int n = 0; n < 30; ++n, ++seed) {
                Lbqf l = random_form(idx, F(p), seed);
                std::vector<BinForm> members;
                for (const BinForm* m : {&l.a(), &l.b(), &l.c()})
                    if (!m->is_zero()) members.push_back(*m);
                CHECK(classify(l).line_bundle == !common_root_in_extensions(members, 4));
            }
        }
    }
}

TEST_CASE("smoothness against extension-field search") {
    // A repeated root of F is a common root of F, F_s and F_t.
    Rng rng(12);
    for (std::uint64_t p : {5ULL, 7ULL}) {
        for (int trial = 0; trial < 200; ++trial) {
            int d = 1 + static_cast<int>(uniform_below(rng, 4));
            BinForm f = random_binform(F(p), d, rng);
            if (trial % 4 == 0) f = f * random_binform(F(p), 1, rng).pow(2);
            if (f.is_zero()) continue;
            std::vector<BinForm> derivs{f};
            for (const BinForm& g : {f.derivative_s(), f.derivative_t()})
                if (!g.is_zero()) derivs.push_back(g);
            CHECK(squarefree_over_closure(f) == !common_root_in_extensions(derivs, 5));
        }
    }
}
