#include "criteria.hpp"

#include <functional>
#include <sstream>

#include "expand.hpp"
#include "extension_field.hpp"
#include "helpers.hpp"
#include "hyperjac/picard.hpp"
#include "hyperjac/random.hpp"

namespace testing_support {

namespace {

// Collects failed checks; a criterion passes when none failed.
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failures_.size() < 5) failures_.push_back(what);
        if (!ok) ++failed_;
    }
    void note(const std::string& s) { notes_.push_back(s); }

    CriterionResult result(int id, std::string name) const {
        std::ostringstream out;
        out << checks_ << " checks";
        if (failed_) out << ", " << failed_ << " failed";
        for (const auto& n : notes_) out << "; " << n;
        for (const auto& f : failures_) out << "; FAILED " << f;
        return {id, std::move(name), failed_ == 0, out.str()};
    }

private:
    long checks_ = 0;
    long failed_ = 0;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

template <class Fn>
CriterionResult guarded(int id, const std::string& name, Fn fn) {
    Checker ck;
    try {
        fn(ck);
    } catch (const std::exception& e) {
        ck.expect(false, std::string("exception: ") + e.what());
    }
    return ck.result(id, name);
}

std::string str(const Lbqf& l) { return l.to_string(); }

const std::vector<StratumIndex> kOracleStrata = {
    {0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 1, 0}, {0, 1, 1}, {1, 1, 0},
    {1, 1, -1}, {0, 2, 0}, {-1, 1, 2}, {1, 2, -1}, {1, 1, 1}, {0, 2, -1},
};

const std::vector<StratumIndex> kGenericStrata = {
    {1, 1, 0}, {0, 0, 2}, {0, 1, 1}, {0, 2, 0}, {-1, 6, 0}, {1, 2, -1},
    {2, 3, -2}, {-2, 3, 4}, {1, 1, -1}, {6, 6, -8}, {-3, 2, 2}, {-3, 1, 1},
};

}  // namespace

CriterionResult criterion_genus3_form() {
    return guarded(1, "genus 3 form on (0,3,1)", [](Checker& ck) {
        Lbqf l = lbqf(0, 3, 1, "s", "s^4+t^4", "s*t^6+t^7");
        ck.expect(l.g() == 3, "g = 3");
        ck.expect(l.n() == 7, "n = 7");
        ck.expect(classify(l).line_bundle, "line bundle");
    });
}

CriterionResult criterion_two_lines_form() {
    return guarded(2, "reducible form on (-1,6,0)", [](Checker& ck) {
        Lbqf l = lbqf(-1, 6, 0, "0", "s^5", "t^12");
        ck.expect(disc_form(l) == form("s^10"), "disc = s^10");
        Classification c = classify(l);
        ck.expect(c.reduced && !c.integral && !c.smooth && c.line_bundle, "classification");
        Bidegree d = bidegree(l);
        ck.expect(d == Bidegree{-1, 11}, "bidegree (-1, 11)");
        ck.expect(!in_Jbd(l), "outside Jbd");
        ck.expect(!caporaso_check(d.d1, d.d2, l.g(), l.n()), "caporaso false");
    });
}

CriterionResult criterion_small_genus_forms() {
    return guarded(3, "genus 0 and genus 1 examples", [](Checker& ck) {
        Lbqf conic = lbqf(1, 1, -1, "s", "0", "-t");
        ck.expect(classify(conic).smooth, "conic smooth");
        ck.expect(conic.g() == 0 && conic.n() == 3, "g = 0, n = 3");
        for (int m = -6; m <= 6; ++m) {
            Lbqf t = twist(conic, m - 1);
            ck.expect(t.idx() == StratumIndex{m, m, 1 - 2 * m}, "twist stratum");
            ck.expect(t.n() == 2 * m + 1 && t.g() == 0, "M = O(2m+1)");
            ck.expect(classify(t).same_verdicts(classify(conic)), "twist verdicts");
        }
        Classification node = classify(lbqf(1, 1, -1, "s", "0", "-s"));
        ck.expect(node.bad_fibers == std::vector<ProjPoint>{ProjPoint::affine(num("0"))}, "bad fiber [0:1]");
        ck.expect(!node.line_bundle, "node not a line bundle");
        Lbqf g1 = lbqf(0, 0, 2, "s*t", "s^2", "t^2");
        ck.expect(classify(g1).smooth, "genus 1 smooth");
        ck.expect(g1.g() == 1, "g = 1");
        ck.expect(disc_form(g1) == form("s^4-4*s*t^3"), "disc s^4-4st^3");
    });
}

CriterionResult criterion_cusp_limit() {
    return guarded(4, "cuspidal limit", [](Checker& ck) {
        Lbqf fam = lbqf(0, 0, 3, "s^3", "e*t^3", "1/4*s^2*t", Qe());
        ck.expect(disc_form(fam) == form("e^2*t^6-s^5*t", Qe()), "family disc");
        Specialization sp = clear_and_specialize(fam);
        ck.expect(sp.limit == lbqf(0, 0, 3, "s^3", "0", "1/4*s^2*t"), "limit form");
        LimitReport r = classify_limit(fam);
        ck.expect(r.disc == form("-s^5*t"), "limit disc");
        bool found = false;
        for (const auto& f : r.ramification)
            if (f.point && *f.point == ProjPoint::affine(num("0"))) found = f.multiplicity == 5;
        ck.expect(found, "multiplicity 5 at [0:1]");
    });
}

CriterionResult criterion_classification_oracles(const CriteriaSizes& sizes) {
    return guarded(5, "line bundle and integrality oracles", [&](Checker& ck) {
        long compared = 0, factored = 0;
        std::uint64_t seed = 0;
        for (std::uint64_t p : {5ULL, 7ULL}) {
            Field f = F(p);
            for (const auto& idx : kOracleStrata) {
                for (int n = 0; n < sizes.oracle_forms; ++n, ++seed) {
                    Lbqf l = random_form(idx, f, seed);
                    Classification c = classify(l);
                    std::vector<BinForm> members;
                    for (const BinForm* m : {&l.a(), &l.b(), &l.c()})
                        if (!m->is_zero()) members.push_back(*m);
                    bool common = common_root_in_extensions(members, 4);
                    ck.expect(c.line_bundle == !common, "line bundle oracle at " + str(l));
                    ++compared;
                    if (c.reduced) {
                        ck.expect(c.integral == irreducibility_crosscheck(l), "integrality at " + str(l));
                        ++factored;
                    }
                }
            }
        }
        ck.note(std::to_string(compared) + " line-bundle comparisons, " + std::to_string(factored) +
                " integrality comparisons");
    });
}

CriterionResult criterion_adjunction() {
    return guarded(6, "adjunction genus", [](Checker& ck) {
        for (int i = -8; i <= 8; ++i)
            for (int j = -8; j <= 8; ++j)
                for (int k = -10; k <= 10; ++k) {
                    StratumIndex idx{i, j, k};
                    SurfaceCtx ctx = SurfaceCtx::of(idx);
                    ck.expect(adjunction_genus(ctx, curve_class(idx)) == idx.genus(), idx.to_string());
                }
    });
}

CriterionResult criterion_bidegree_bound(const CriteriaSizes& sizes) {
    return guarded(7, "bidegree bound on bounded forms", [&](Checker& ck) {
        Rng rng(2024);
        int built = 0;
        while (built < sizes.reducible_forms) {
            Field f = built % 2 ? Q() : F(101);
            int i = static_cast<int>(uniform_between(rng, -3, 3));
            int j = i + static_cast<int>(uniform_between(rng, 0, 4));
            SurfaceCtx ctx(i, j);
            int e1 = static_cast<int>(uniform_between(rng, i, j + 4));
            int e2 = static_cast<int>(uniform_between(rng, i, j + 4));
            if (e1 + e2 - 2 * j < 0) continue;  // needs 2i+k >= 0
            auto factor = [&](int e) {
                for (;;) {
                    BinForm al = random_binform(f, e - j, rng);
                    BinForm be = random_binform(f, e - i, rng);
                    if (!al.is_zero() || !be.is_zero()) return CoxFactor(al, be, e, ctx);
                }
            };
            Lbqf l = multiply_factors(ctx, factor(e1), factor(e2));
            Classification c = classify(l);
            if (!c.reduced || !c.line_bundle) continue;
            ++built;
            Bidegree d = bidegree(l);
            ck.expect(in_Jbd(l), "bounded by construction");
            ck.expect(d.d1 + d.d2 == l.n(), "sum rule at " + str(l));
            ck.expect(d.d1 >= i, "effective cone at " + str(l));
            ck.expect(bidegree_bound_holds(d.d1, l.g(), l.n()), "bound at " + str(l));
        }
        Lbqf ex = lbqf(-1, 6, 0, "0", "s^5", "t^12");
        ck.expect(!bidegree_bound_holds(bidegree(ex).d1, ex.g(), ex.n()), "(-1,6,0) form violates the bound");
    });
}

CriterionResult criterion_group_action(const CriteriaSizes& sizes) {
    return guarded(8, "automorphism invariance", [&](Checker& ck) {
        std::uint64_t seed = 0;
        for (const Field& f : {Q(), F(5), F(7), F(101)}) {
            for (int n = 0; n < sizes.action_pairs; ++n, ++seed) {
                const StratumIndex& idx = kOracleStrata[seed % kOracleStrata.size()];
                Lbqf l = random_form(idx, f, 10000 + seed);
                Automorphism phi = random_automorphism(f, idx, 20000 + seed);
                Lbqf moved = apply_automorphism(l, phi);
                ck.expect(moved == expand_substitution(l, phi), "substitution at " + str(l));
                FieldElem scale = phi.lambda * phi.det();
                ck.expect(disc_form(moved) == (scale * scale) * disc_form(l), "disc at " + str(l));
                Classification a = classify(l), b = classify(moved);
                ck.expect(a.same_verdicts(b), "verdicts at " + str(l));
                ck.expect(a.bad_fiber_factor == b.bad_fiber_factor, "bad fibers at " + str(l));
            }
        }
    });
}

CriterionResult criterion_picard() {
    return guarded(9, "Picard groups and weights", [](Checker& ck) {
        for (int g = 0; g <= 3; ++g) {
            ck.expect(pic(StackId::hbar, {.g = g}) == AbGroupDesc(1, {}), "Hbar");
            ck.expect(pic(StackId::hur, {.g = g}) == AbGroupDesc(0, {8LL * g + 4}), "Hur");
        }
        ck.expect(pic(StackId::q, {.i = 0, .j = 2, .k = 1}) == AbGroupDesc(3, {}), "Q split");
        ck.expect(pic(StackId::q, {.i = 1, .j = 1, .k = 0}) == AbGroupDesc(2, {}), "Q balanced");
        for (auto [g, n] : {std::pair{1, 3}, {2, 4}, {3, 5}}) {
            ck.expect(pic(StackId::jbd, {.g = g, .n = n}) == AbGroupDesc(3, {}), "Jbd");
            ck.expect(pic(StackId::j, {.g = g, .n = n}) == AbGroupDesc(2, {8LL * g + 4}), "J");
        }
        for (int g = 0; g <= 3; ++g) {
            WeightReport r = disc_weight_verify(g, 10, F(1009), static_cast<std::uint64_t>(g));
            ck.expect(r.ok() && r.exponent == 4 * g + 2 && r.character_weight == 8 * g + 4,
                      "disc weight g = " + std::to_string(g));
            WeightReport rq = disc_weight_verify(g, 5, Q(), static_cast<std::uint64_t>(g));
            ck.expect(rq.ok(), "disc weight over Q, g = " + std::to_string(g));
            for (StratumIndex idx : {StratumIndex{0, 0, g + 1}, StratumIndex{0, 1, g}}) {
                WeightReport d = discdisc_weight_verify(idx, 5, F(1009), static_cast<std::uint64_t>(g));
                ck.expect(d.ok() && d.exponent == 2 * (4 * g + 2) && d.character_weight == 8 * g + 4,
                          "discdisc weight at " + idx.to_string());
            }
        }
    });
}

CriterionResult criterion_strata(const CriteriaSizes& sizes) {
    return guarded(10, "specialization and generic strata", [&](Checker& ck) {
        // P_i = (i, 4-i, k) for d = 4.
        for (int i = 2; i > -4; --i) {
            StratumIndex from{i, 4 - i, 0}, to{i - 1, 5 - i, 0};
            ck.expect(stratum_specializes(from, to), "chain step");
            ck.expect(!stratum_specializes(to, from), "chain is one way");
        }
        std::vector<StratumIndex> pts;
        for (int i = -10; i <= 2; ++i) pts.push_back({i, 4 - i, 0});
        pts.push_back({0, 3, 0});
        pts.push_back({1, 3, 1});
        for (const auto& a : pts) {
            ck.expect(stratum_specializes(a, a), "reflexive");
            for (const auto& b : pts) {
                if (stratum_specializes(a, b) && stratum_specializes(b, a)) ck.expect(a == b, "antisymmetric");
                for (const auto& c : pts)
                    if (stratum_specializes(a, b) && stratum_specializes(b, c))
                        ck.expect(stratum_specializes(a, c), "transitive");
            }
        }
        std::uint64_t seed = 777;
        for (const auto& idx : kGenericStrata) {
            GenericPrediction pred = generic_stratum_table(idx);
            int hits = 0;
            bool unbounded = 2 * std::min(idx.i, idx.j) + idx.k < 0;
            for (int n = 0; n < sizes.generic_samples; ++n, ++seed) {
                Lbqf l = random_form(idx, F(101), seed);
                Classification c = classify(l);
                if (matches_generic(l, c, pred)) ++hits;
                if (unbounded) ck.expect(!c.integral, "forced non-integral at " + str(l));
            }
            ck.expect(hits * 100 >= 95 * sizes.generic_samples, "generic rate at " + idx.to_string());
            ck.note(idx.to_string() + " " + std::to_string(hits) + "/" + std::to_string(sizes.generic_samples));
        }
    });
}

std::vector<CriterionResult> run_all_criteria(const CriteriaSizes& sizes) {
    return {
        criterion_genus3_form(),
        criterion_two_lines_form(),
        criterion_small_genus_forms(),
        criterion_cusp_limit(),
        criterion_classification_oracles(sizes),
        criterion_adjunction(),
        criterion_bidegree_bound(sizes),
        criterion_group_action(sizes),
        criterion_picard(),
        criterion_strata(sizes),
    };
}

}  // namespace testing_support
