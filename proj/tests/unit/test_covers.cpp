#include <doctest.h>

#include "helpers.hpp"
#include "hyperjac/random.hpp"

using namespace testing_support;

TEST_CASE("cover construction") {
    CHECK_NOTHROW(Cover(4, form("s^10")));
    CHECK_THROWS_AS(Cover(3, form("s^10")), PreconditionError);
    CHECK_NOTHROW(Cover(0, BinForm(Q(), 2)));
}

TEST_CASE("cover classification") {
    CHECK(classify_cover(Cover(4, form("s^10"))) == CoverClassification{true, false, false});
    CHECK(classify_cover(Cover(0, form("4*s*t"))) == CoverClassification{true, true, true});
    CHECK(classify_cover(Cover(0, BinForm(Q(), 2))) == CoverClassification{false, false, false});
    CHECK(classify_cover(Cover(0, form("s^2+t^2"))) == CoverClassification{true, true, true});
    CHECK(classify_cover(Cover(0, form("s^2+t^2", F(5)))) == CoverClassification{true, true, true});
    CHECK(classify_cover(Cover(0, form("s^2+2*s*t+t^2", F(5)))) == CoverClassification{true, false, false});
    CHECK(classify_cover(Cover(1, form("s^3*t"))) == CoverClassification{true, true, false});
    CHECK(classify_cover(Cover(2, form("s^6-s^2*t^4", F(5)))) == CoverClassification{true, true, false});
    CHECK(classify_cover(Cover(2, form("s^5*t-s*t^5", F(5)))) == CoverClassification{true, true, true});
    // 3 divides the degree: the discriminant route is skipped.
    CHECK(classify_cover(Cover(2, form("s^6-s^2*t^4", F(3)))) == CoverClassification{true, true, false});
    CHECK(classify_cover(Cover(2, form("s^6+2*s^4*t^2+s^2*t^4+2*t^6", F(3)))).reduced);
    CHECK_THROWS_AS(Field::prime(2), PreconditionError);
}

TEST_CASE("squarefree over the closure") {
    CHECK(squarefree_over_closure(form("s*t")));
    CHECK_FALSE(squarefree_over_closure(form("s^2")));
    CHECK(squarefree_over_closure(form("s^5-s*t^4", F(5))));
    CHECK_FALSE(squarefree_over_closure(form("s^5+t^5", F(5))));
    CHECK(squarefree_over_closure(form("1", 0)));
    CHECK_FALSE(squarefree_over_closure(BinForm(Q(), 2)));
}

TEST_CASE("ramification") {
    auto r = ramification(Cover(2, form("s^5*t")));
    REQUIRE(r.size() == 2);
    CHECK(r[0].multiplicity == 5);
    CHECK(*r[0].point == ProjPoint::affine(num("0")));
    CHECK(r[1].multiplicity == 1);
    CHECK(*r[1].point == ProjPoint::infinity(Q()));

    r = ramification(Cover(0, form("4*s*t")));
    REQUIRE(r.size() == 2);
    CHECK(r[0].multiplicity == 1);
    CHECK(r[1].multiplicity == 1);

    r = ramification(Cover(0, form("s^2+t^2")));
    REQUIRE(r.size() == 1);
    CHECK_FALSE(r[0].point);
    CHECK(r[0].factor == form("s^2+t^2"));

    r = ramification(Cover(2, form("(s-t)^2*(s+2*t)*(s^2+t^2)*t")));
    REQUIRE(r.size() == 4);
    CHECK(*r[0].point == ProjPoint::affine(num("-2")));
    CHECK(r[0].multiplicity == 1);
    CHECK(*r[1].point == ProjPoint::affine(num("1")));
    CHECK(r[1].multiplicity == 2);
    CHECK(*r[2].point == ProjPoint::infinity(Q()));
    CHECK_FALSE(r[3].point);
    CHECK_THROWS_AS(ramification(Cover(1, BinForm(Q(), 4))), PreconditionError);
}

TEST_CASE("ramification accounts for the degree") {
    Rng rng(9);
    for (const Field& f : {Q(), F(3), F(5), F(101)}) {
        for (int trial = 0; trial < 150; ++trial) {
            int g = trial % 4;
            BinForm sigma = random_binform(f, 2 * g + 2, rng);
            if (trial % 3 == 0) sigma = random_binform(f, g + 1, rng).pow(2);
            if (sigma.is_zero()) continue;
            auto r = ramification(Cover(g, sigma));
            int total = 0;
            bool all_simple = true;
            for (const auto& factor : r) {
                total += factor.multiplicity * factor.factor.slot();
                all_simple = all_simple && factor.multiplicity == 1;
                if (factor.point) CHECK(factor.factor.slot() == 1);
            }
            // Constant unit carries no roots; everything else is accounted for.
            CHECK(total == 2 * g + 2);
            CHECK(all_simple == classify_section(sigma).smooth);
        }
    }
}

TEST_CASE("etale covers") {
    CHECK(is_etale(Cover(-1, form("1", 0))));
    CHECK_FALSE(is_etale(Cover(0, form("s*t"))));
    CHECK_FALSE(is_etale(Cover(0, form("s^2+t^2"))));
    CHECK_FALSE(is_etale(Cover(-1, BinForm(Q(), 0))));
}
