#include <doctest.h>

#include "helpers.hpp"

using namespace testing_support;

TEST_CASE("forms parse against declared slots") {
    Field q = Q();
    CHECK(parse_form("s*t^6+t^7", q, 7) == form("t^7+s*t^6"));
    CHECK(parse_form("(s+t)^2", q, 2) == form("s^2+2*s*t+t^2"));
    CHECK(parse_form("1/4*s^2*t", q, 3).coeff(1) == num("1/4"));
    CHECK(parse_form("0", q, -3).slot() == -3);
    CHECK(parse_form("s^3/2", q, 3).coeff(0) == num("1/2"));
}

TEST_CASE("slot mismatch names the slot") {
    try {
        parse_form("s^3", Q(), 2, "b");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("slot b expects degree 2") != std::string::npos);
        CHECK(e.token() == "s^3");
    }
}

TEST_CASE("parse errors carry a column and token") {
    try {
        parse_form("s^2 + * t^2", Q(), 2);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 7);
        CHECK(e.token() == "*");
    }
    CHECK_THROWS_AS(parse_form("1/s", Q(), -1), ParseError);
    CHECK_THROWS_AS(parse_form("st", Q(), 2), ParseError);
    CHECK_THROWS_AS(parse_form("e*s", Q(), 1), ParseError);
    CHECK_THROWS_AS(parse_form("s/5", F(5), 1), ParseError);
    CHECK_THROWS_AS(parse_form("(s+t", Q(), 1), ParseError);
}

TEST_CASE("laurent scalars") {
    Field qe = Qe();
    BinForm f = parse_form("e*t^3 + e^-1*s^3/2", qe, 3);
    CHECK(f.coeff(0) == num("e^-1/2", qe));
    CHECK(f.coeff(3) == num("e", qe));
    CHECK(num("e^-2*3+e*5", qe).laurent_coeff(-2) == num("3"));
}

TEST_CASE("points") {
    Field q = Q();
    CHECK(parse_point("[1:0]", q).is_infinity());
    CHECK(parse_point("[0:1]", q) == ProjPoint::affine(num("0")));
    CHECK(parse_point("3/2", q) == ProjPoint::affine(num("3/2")));
    CHECK_THROWS_AS(parse_point("[0:0]", q), ParseError);
}
