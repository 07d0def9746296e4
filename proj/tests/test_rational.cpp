#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aglab/rational.hpp"

using aglab::Rat;

TEST_CASE("construction normalizes") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(0, 7) == Rat::zero());
    CHECK(Rat(0, 7).den == 1);
    CHECK(Rat(5, 5) == Rat::one());
    CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
}

TEST_CASE("ordering is exact") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(2, 3) > Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat::zero());
    CHECK(Rat(1, 3) <= Rat(2, 6));
    // cross multiplication must not overflow for large terms
    CHECK(Rat(1000000007, 2000000011) < Rat(1000000009, 2000000011));
}

TEST_CASE("min max and arithmetic") {
    CHECK(aglab::rat_min(Rat(1, 4), Rat(1, 2)) == Rat(1, 4));
    CHECK(aglab::rat_max(Rat(1, 4), Rat(1, 2)) == Rat(1, 2));
    CHECK(Rat(1, 4) + Rat(1, 4) == Rat(1, 2));
    CHECK(Rat(3, 4) - Rat(1, 4) == Rat(1, 2));
    CHECK(Rat(1, 2) + Rat(1, 2) == Rat::one());
}

TEST_CASE("unit interval") {
    CHECK(Rat::zero().in_unit_interval());
    CHECK(Rat::one().in_unit_interval());
    CHECK(Rat(3, 4).in_unit_interval());
    CHECK_FALSE(Rat(5, 4).in_unit_interval());
    CHECK_FALSE(Rat(-1, 4).in_unit_interval());
}

TEST_CASE("parse accepts fractions integers and decimals") {
    CHECK(Rat::parse("3/4") == Rat(3, 4));
    CHECK(Rat::parse("6/8") == Rat(3, 4));
    CHECK(Rat::parse("1") == Rat::one());
    CHECK(Rat::parse("0") == Rat::zero());
    CHECK(Rat::parse("0.25") == Rat(1, 4));
    CHECK(Rat::parse("0.3") == Rat(3, 10));
    CHECK(Rat::parse("-0.5") == Rat(-1, 2));
    CHECK(Rat::parse("2.5") == Rat(5, 2));
    CHECK_THROWS_AS(Rat::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1.2.3"), std::invalid_argument);
}

TEST_CASE("str round trips through parse") {
    for (Rat r : {Rat(3, 4), Rat(-1, 2), Rat::zero(), Rat::one(), Rat(7, 10)})
        CHECK(Rat::parse(r.str()) == r);
    CHECK(Rat(1, 2).str() == "1/2");
    CHECK(Rat(2, 1).str() == "2");
}
