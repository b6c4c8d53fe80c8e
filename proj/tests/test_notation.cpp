#include "doctest.h"

#include "helpers.hpp"

#include "curvesing/notation.hpp"

using namespace curvesing;
using namespace testing_helpers;

TEST_CASE("exponent notation") {
    const MultiGerm g = parse_germ("(2,3,-,-)+(-,5,4,3)");
    CHECK(g.ambient() == 4);
    CHECK(g.branch_count() == 2);
    CHECK(g.branch(0).polynomials()[1] == tpow(3));
    CHECK(g.branch(1).polynomials()[0].zero());
    CHECK(g.branch(1).polynomials()[1] == tpow(5));
    CHECK(format_germ(g) == "(2,3,-,-)+(-,5,4,3)");
    CHECK(format_germ(parse_germ("(4,6,7)")) == "(4,6,7)");
}

TEST_CASE("polynomial notation") {
    const MultiGerm g = parse_germ("(t^2, t^3+t^4)");
    CHECK(g.branch(0).polynomials()[1] == tpow(3) + tpow(4));
    CHECK(format_germ(g) == "(t^2, t^3 + t^4)");
    const MultiGerm h = parse_germ("(2t^2, -1/2*t^3 + (t-t)^2, -)");
    CHECK(h.branch(0).polynomials()[0] == tpow(2, 2));
    CHECK(h.branch(0).polynomials()[1] == tpow(3, Rational(-1, 2)));
    CHECK(parse_germ("( 2 , 3 )").branch_count() == 1);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_germ("(2,3"), ParseError);
    CHECK_THROWS_AS(parse_germ("(2,3)+(1)"), ParseError);
    CHECK_THROWS_AS(parse_germ("(0,3)"), ParseError);
    CHECK_THROWS_AS(parse_germ("(2,3)x"), ParseError);
    CHECK_THROWS_AS(parse_germ("(t+1, t)"), ParseError);
    CHECK_THROWS_AS(parse_germ("(-,-)"), ParseError);
    try {
        parse_germ("(2,3)+(4,q)");
    } catch (const ParseError& e) {
        CHECK(e.position() == 9);
    }
}

TEST_CASE("printing is a canonical form") {
    for (const char* text : {"(2,3,-,-)+(-,5,4,3)", "(1,-,-)+(1,2,-)+(1,-,2)", "(t^2, t^3 + t^4)",
                             "(t, 2*t)+(t, -t)", "(-, t)+(t^2, t)+(2*t^2, t)"}) {
        const std::string once = format_germ(parse_germ(text));
        CHECK(once == text);
        CHECK(format_germ(parse_germ(once)) == once);
    }
    CHECK(format_germ(parse_germ("(t^2,t^3)")) == "(2,3)");
    CHECK(format_germ(parse_germ("( 1 , - )")) == "(1,-)");
}
