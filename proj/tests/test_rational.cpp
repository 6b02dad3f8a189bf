#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stabef/rational.hpp"

using namespace stabef;

TEST_CASE("parse canonicalizes") {
    CHECK(to_fraction_string(parse_rational("-7/21")) == "-1/3");
    CHECK(to_fraction_string(parse_rational("6/4")) == "3/2");
    CHECK(to_fraction_string(parse_rational("0/5")) == "0/1");
    CHECK(to_fraction_string(parse_rational("-0")) == "0/1");
    CHECK(to_fraction_string(parse_rational("4")) == "4/1");
    CHECK(to_fraction_string(parse_rational("9/-6")) == "-3/2");
}

TEST_CASE("arithmetic stays canonical") {
    Rational a = parse_rational("1/3");
    Rational b = parse_rational("1/6");
    CHECK(to_fraction_string(a + b) == "1/2");
    CHECK(to_fraction_string(a - a) == "0/1");
    CHECK(a + b == parse_rational("3/6"));
}

TEST_CASE("rejects malformed input") {
    CHECK_THROWS_AS(parse_rational("1/0"), FormatError);
    CHECK_THROWS_AS(parse_rational(""), FormatError);
    CHECK_THROWS_AS(parse_rational("x"), FormatError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), FormatError);
    CHECK_THROWS_AS(parse_rational("1.5"), FormatError);
    CHECK_THROWS_AS(parse_rational("1 /2"), FormatError);
}

TEST_CASE("round trip") {
    for (const char* s : {"0/1", "1/1", "-1/1", "22/7", "-355/113"}) {
        CHECK(to_fraction_string(parse_rational(s)) == s);
    }
}
