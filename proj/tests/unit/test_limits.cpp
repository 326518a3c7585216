#include <doctest.h>

#include "helpers.hpp"
#include "hyperjac/random.hpp"

using namespace testing_support;

namespace {

Lbqf family(int i, int j, int k, const std::string& a, const std::string& b, const std::string& c) {
    return lbqf(i, j, k, a, b, c, Qe());
}

Lbqf cusp_family() { return family(0, 0, 3, "s^3", "e*t^3", "1/4*s^2*t"); }

}  // namespace

TEST_CASE("family discriminant") {
    CHECK(disc_form(cusp_family()) == form("e^2*t^6-s^5*t", Qe()));
}

TEST_CASE("clearing denominators") {
    Specialization sp = clear_and_specialize(cusp_family());
    CHECK(sp.v == 0);
    CHECK(sp.limit == lbqf(0, 0, 3, "s^3", "0", "1/4*s^2*t"));

    sp = clear_and_specialize(family(0, 0, 1, "e*s", "e*t", "e*(s+t)"));
    CHECK(sp.v == 1);
    CHECK(sp.limit == lbqf(0, 0, 1, "s", "t", "s+t"));

    sp = clear_and_specialize(family(0, 0, 1, "s", "e^-1*t", "s"));
    CHECK(sp.v == -1);
    CHECK(sp.limit == lbqf(0, 0, 1, "0", "t", "0"));

    CHECK_THROWS_AS(clear_and_specialize(Lbqf::zero(Qe(), {0, 0, 1})), PreconditionError);
    CHECK_THROWS_AS(clear_and_specialize(lbqf(0, 0, 1, "s", "t", "s")), PreconditionError);
    CHECK_THROWS_AS(specialize_at_zero(family(0, 0, 1, "s", "e^-1*t", "s")), PreconditionError);
}

TEST_CASE("cuspidal limit") {
    LimitReport r = classify_limit(cusp_family());
    CHECK(r.classification.reduced);
    CHECK(r.classification.integral);
    CHECK_FALSE(r.classification.smooth);
    CHECK_FALSE(r.classification.line_bundle);
    CHECK(*r.classification.bad_fiber_factor == form("s^2"));
    CHECK(r.disc == form("-s^5*t"));
    REQUIRE(r.ramification.size() == 2);
    CHECK(*r.ramification[0].point == ProjPoint::affine(num("0")));
    CHECK(r.ramification[0].multiplicity == 5);
    CHECK(r.ramification[1].multiplicity == 1);
    CHECK_FALSE(r.bidegree);
}

TEST_CASE("limit reports") {
    LimitReport smooth = classify_limit(family(1, 1, -1, "s+e*t", "e*s", "-t"));
    CHECK(smooth.classification.smooth);

    LimitReport bad = classify_limit(family(0, 0, 1, "s", "e*s", "e^2*s"));
    CHECK_FALSE(bad.classification.line_bundle);
    CHECK(bad.classification.bad_fibers == std::vector<ProjPoint>{ProjPoint::affine(num("0"))});

    LimitReport split = classify_limit(family(0, 1, 1, "e^2*s", "e^2*(s^2+t^2)", "e^3*t^3"));
    CHECK(split.v == 2);
    REQUIRE(split.bidegree);
    CHECK(*split.bidegree == Bidegree{1, 2});
}

TEST_CASE("weighted limits") {
    Lbqf fam = family(0, 0, 0, "1", "e", "e^2");
    Lbqf first = weighted_specialize(fam, 0, 0, 0);
    CHECK(first == lbqf(0, 0, 0, "1", "0", "0"));
    CHECK(disc_form(first).is_zero());
    Lbqf second = weighted_specialize(fam, 0, -1, 0);
    CHECK(second == lbqf(0, 0, 0, "1", "1", "1"));
    CHECK(disc_form(second) == form("-3", 0));
    CHECK(weighted_specialize(fam, 1, 0, -2) == second);
    CHECK_THROWS_AS(weighted_specialize(fam, 0, -2, 0), PreconditionError);
    CHECK_THROWS_AS(weighted_specialize(fam, 1, 1, 0), PreconditionError);
    Lbqf f2 = family(0, 0, 1, "e*s", "e*t", "e*(s+t)");
    CHECK(weighted_specialize(f2, 0, 0, -1) == clear_and_specialize(f2).limit);
}

TEST_CASE("limit properties") {
    Rng rng(5);
    const std::vector<StratumIndex> strata = {{0, 0, 1}, {0, 1, 0}, {1, 1, -1}, {0, 1, 1}, {-1, 2, 1}};
    for (int trial = 0; trial < 200; ++trial) {
        const StratumIndex& idx = strata[static_cast<std::size_t>(trial) % strata.size()];
        auto draw = [&](int slot) {
            std::vector<FieldElem> cs;
            for (int q = 0; q <= std::max(slot, -1); ++q) {
                FieldElem c = FieldElem::zero(Qe());
                for (int ex = -2; ex <= 2; ++ex)
                    if (uniform_below(rng, 3) == 0)
                        c += FieldElem::laurent_monomial(Qe(), ex, random_scalar(Q(), rng));
                cs.push_back(c);
            }
            return BinForm(Qe(), slot, std::move(cs));
        };
        Lbqf fam(idx, draw(idx.slot_a()), draw(idx.slot_b()), draw(idx.slot_c()));
        if (fam.is_zero()) continue;
        Specialization sp = clear_and_specialize(fam);
        CHECK_FALSE(sp.limit.is_zero());
        CHECK(sp.limit.g() == fam.g());
        CHECK(sp.limit.n() == fam.n());
        int m = static_cast<int>(uniform_between(rng, -3, 3));
        Lbqf shifted(idx, fam.a().map_coeffs(Qe(), [m](const FieldElem& c) { return c.shift(m); }),
                     fam.b().map_coeffs(Qe(), [m](const FieldElem& c) { return c.shift(m); }),
                     fam.c().map_coeffs(Qe(), [m](const FieldElem& c) { return c.shift(m); }));
        CHECK(clear_and_specialize(shifted).limit == sp.limit);
        BinForm disc = disc_form(fam).map_coeffs(Q(), [&](const FieldElem& c) {
            return c.laurent_coeff(2 * sp.v);
        });
        CHECK(disc == disc_form(sp.limit));
    }
}
