#pragma once

// Intersection theory on the Hirzebruch surface P(O(i) + O(j)) in the basis
// (D_hor, D_vert), and factorizations of p in the Cox ring K[s,t,x,y] with
// deg x = (1, j), deg y = (1, i).

#include <optional>
#include <string>
#include <utility>

#include "hyperjac/lbqf.hpp"

namespace hyperjac {

struct SurfaceCtx {
    int i;
    int j;
    SurfaceCtx(int i_, int j_);
    static SurfaceCtx of(const StratumIndex& idx);
};

struct DivClass {
    int h;  // D_hor coefficient
    int v;  // D_vert coefficient
    friend bool operator==(const DivClass&, const DivClass&) = default;
};

/// D_vert^2 = 0, D_vert.D_hor = 1, D_hor^2 = -i-j.
int pair(const SurfaceCtx& ctx, const DivClass& a, const DivClass& b);

/// 2 D_hor + (2i+2j+k) D_vert.
DivClass curve_class(const StratumIndex& idx);
DivClass curve_class(const Lbqf& l);
/// D_hor + (i+j) D_vert.
DivClass O_pi1_class(const SurfaceCtx& ctx);
/// -2 D_hor - (i+j+2) D_vert.
DivClass canonical_class(const SurfaceCtx& ctx);
/// 1 + C.(C+K)/2.
int adjunction_genus(const SurfaceCtx& ctx, const DivClass& c);

/// alpha x + beta y of Cox bidegree (1, e): alpha has slot e-j, beta slot e-i.
struct CoxFactor {
    BinForm alpha;
    BinForm beta;
    int e;

    CoxFactor(BinForm alpha_, BinForm beta_, int e_, const SurfaceCtx& ctx);
    std::string to_string() const;
};

/// The product of two factors, a form at stratum (i, j, e1+e2-2i-2j).
Lbqf multiply_factors(const SurfaceCtx& ctx, const CoxFactor& p1, const CoxFactor& p2);

/// Factors p over K when its discriminant is a square, with p1 p2 = p
/// exactly. Needs a nonzero discriminant; works for any content.
std::optional<std::pair<CoxFactor, CoxFactor>> split_quadratic(const Lbqf& l);

/// split_quadratic restricted to reduced line-bundle forms; throws
/// PreconditionError otherwise.
std::optional<std::pair<CoxFactor, CoxFactor>> factor_if_reducible(const Lbqf& l);

struct Bidegree {
    int d1;
    int d2;
    friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// Sorted Cox degrees of the two components; throws when p is irreducible.
Bidegree bidegree(const Lbqf& l);

/// d1 >= n/2 - (g+1), compared exactly.
bool bidegree_bound_holds(int d1, int g, int n);

/// Both d_i in [n/2 - (g+1)/2, n/2 + (g+1)/2], compared exactly.
bool caporaso_check(int d1, int d2, int g, int n);

}  // namespace hyperjac
