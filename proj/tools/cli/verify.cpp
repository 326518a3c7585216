#include "verify.hpp"

#include <functional>
#include <map>

#include "hyperjac/hirzebruch.hpp"
#include "hyperjac/lbqf.hpp"
#include "hyperjac/picard.hpp"
#include "hyperjac/random.hpp"

namespace hyperjac::cli {

namespace {

constexpr std::size_t kMaxReported = 5;

const std::vector<StratumIndex> kStrata = {
    {0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 1, 0}, {0, 1, 1}, {1, 1, 0},
    {1, 1, -1}, {0, 2, 0}, {-1, 1, 2}, {1, 2, -1}, {1, 1, 1}, {0, 2, -1},
};

using Trial = std::function<bool(int trial, std::uint64_t seed, std::string& why)>;

SuiteResult run_trials(const std::string& name, int trials, std::uint64_t seed, const Trial& body) {
    SuiteResult r{name, trials, 0, {}};
    for (int t = 0; t < trials; ++t) {
        std::string why;
        bool ok = false;
        try {
            ok = body(t, seed + static_cast<std::uint64_t>(t), why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        if (ok) ++r.passed;
        else if (r.failures.size() < kMaxReported) r.failures.push_back("trial " + std::to_string(t) + ": " + why);
    }
    return r;
}

const StratumIndex& stratum_for(int t) { return kStrata[static_cast<std::size_t>(t) % kStrata.size()]; }

SuiteResult action(const Field& f, int trials, std::uint64_t seed) {
    return run_trials("action", trials, seed, [&](int t, std::uint64_t s, std::string& why) {
        Lbqf l = random_form(stratum_for(t), f, s);
        Automorphism phi = random_automorphism(f, l.idx(), s ^ 0x9e3779b97f4a7c15ULL);
        Lbqf m = apply_automorphism(l, phi);
        FieldElem scale = phi.lambda * phi.det();
        why = l.to_string();
        return disc_form(m) == (scale * scale) * disc_form(l) && classify(l).same_verdicts(classify(m)) &&
               classify(l).bad_fiber_factor == classify(m).bad_fiber_factor;
    });
}

SuiteResult covers(const Field& f, int trials, std::uint64_t seed) {
    return run_trials("covers", trials, seed, [&](int t, std::uint64_t s, std::string& why) {
        Lbqf l = random_form(stratum_for(t), f, s);
        Classification c = classify(l);
        CoverClassification cc = classify_cover(forget_to_cover(l));
        why = l.to_string();
        return c.reduced == cc.reduced && c.integral == cc.integral && c.smooth == cc.smooth;
    });
}

SuiteResult twists(const Field& f, int trials, std::uint64_t seed) {
    return run_trials("twist", trials, seed, [&](int t, std::uint64_t s, std::string& why) {
        Lbqf l = random_form(stratum_for(t), f, s);
        int m = t % 7 - 3;
        Lbqf tw = twist(l, m);
        why = l.to_string();
        return tw.g() == l.g() && tw.n() == l.n() + 2 * m && disc_form(tw) == disc_form(l) &&
               classify(tw).same_verdicts(classify(l)) && twist(tw, -m) == l &&
               classify(swap_orientation(l)).same_verdicts(classify(l));
    });
}

SuiteResult factorization(const Field& f, int trials, std::uint64_t seed) {
    return run_trials("factor", trials, seed, [&](int, std::uint64_t s, std::string& why) {
        Rng rng(s);
        int i = static_cast<int>(uniform_between(rng, -2, 2));
        int j = i + static_cast<int>(uniform_between(rng, 0, 3));
        SurfaceCtx ctx(i, j);
        auto draw = [&](int e) {
            for (;;) {
                BinForm al = random_binform(f, e - j, rng);
                BinForm be = random_binform(f, e - i, rng);
                if (!al.is_zero() || !be.is_zero()) return CoxFactor(al, be, e, ctx);
            }
        };
        int e1 = static_cast<int>(uniform_between(rng, i, j + 3));
        int e2 = static_cast<int>(uniform_between(rng, i, j + 3));
        Lbqf l = multiply_factors(ctx, draw(e1), draw(e2));
        why = l.to_string();
        Classification c = classify(l);
        if (!c.reduced || !c.line_bundle) return true;  // outside the factorization's domain
        auto split = factor_if_reducible(l);
        if (!split || c.integral) return false;
        Bidegree d = bidegree(l);
        bool bound = !in_Jbd(l) || bidegree_bound_holds(d.d1, l.g(), l.n());
        return multiply_factors(ctx, split->first, split->second) == l &&
               d == Bidegree{std::min(e1, e2), std::max(e1, e2)} && d.d1 >= i && bound;
    });
}

SuiteResult integrality(const Field& f, int trials, std::uint64_t seed) {
    return run_trials("integrality", trials, seed, [&](int t, std::uint64_t s, std::string& why) {
        Lbqf l = random_form(stratum_for(t), f, s);
        Classification c = classify(l);
        why = l.to_string();
        if (!c.reduced) return true;
        return c.integral == irreducibility_crosscheck(l);
    });
}

SuiteResult weights(const Field& f, int trials, std::uint64_t seed) {
    return run_trials("weights", trials, seed, [&](int t, std::uint64_t s, std::string& why) {
        int g = t % 4;
        WeightReport a = disc_weight_verify(g, 1, f, s);
        StratumIndex idx{0, t % 2, g + 1 - t % 2};
        WeightReport b = discdisc_weight_verify(idx, 1, f, s);
        why = "g = " + std::to_string(g);
        for (const auto& m : a.failures) why += "; " + m;
        for (const auto& m : b.failures) why += "; " + m;
        return a.ok() && b.ok() && a.character_weight == 8 * g + 4 && b.character_weight == 8 * g + 4;
    });
}

SuiteResult adjunction(const Field&, int, std::uint64_t seed) {
    std::vector<StratumIndex> all;
    for (int i = -8; i <= 8; ++i)
        for (int j = i; j <= 8; ++j)
            for (int k = -10; k <= 10; ++k) all.push_back({i, j, k});
    return run_trials("adjunction", static_cast<int>(all.size()), seed, [&](int t, std::uint64_t, std::string& why) {
        const StratumIndex& idx = all[static_cast<std::size_t>(t)];
        why = idx.to_string();
        SurfaceCtx ctx(idx.i, idx.j);
        return adjunction_genus(ctx, curve_class(idx)) == idx.genus() &&
               pair(ctx, curve_class(idx), O_pi1_class(ctx)) == idx.degree();
    });
}

struct Suite {
    const char* name;
    SuiteResult (*fn)(const Field&, int, std::uint64_t);
};

constexpr Suite kSuites[] = {
    {"action", action},   {"covers", covers},           {"twist", twists},     {"factor", factorization},
    {"integrality", integrality}, {"weights", weights}, {"adjunction", adjunction},
};

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& s : kSuites) n.emplace_back(s.name);
        return n;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, const Field& field, int trials, std::uint64_t seed) {
    for (const auto& s : kSuites)
        if (name == s.name) return s.fn(field, trials, seed);
    throw PreconditionError("unknown suite '" + name + "'");
}

}  // namespace hyperjac::cli
