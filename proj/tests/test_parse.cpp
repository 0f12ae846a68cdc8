#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hrpkit/parse.hpp"

using namespace hrpkit;

TEST_CASE("round trips") {
    IntPoly p = parse_poly("2,-2,3,-2,3,-2,2");
    CHECK(p == IntPoly{2, -2, 3, -2, 3, -2, 2});
    CHECK(poly_to_string(p) == "2,-2,3,-2,3,-2,2");

    CHECK(parse_poly("-1,-1,1") == IntPoly{-1, -1, 1});
    CHECK(parse_poly(" 1 , +2 ,  3 ") == IntPoly{1, 2, 3});
    // unicode minus
    CHECK(parse_poly("\xE2\x88\x92" "1,2") == IntPoly{-1, 2});
    // leading zeros in higher coefficients are normalized away
    CHECK(poly_to_string(parse_poly("1,2,0")) == "1,2");
}

TEST_CASE("usage errors carry a position") {
    CHECK_THROWS_WITH_AS(parse_poly("0"), "zero polynomial at position 0", std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("1,2,"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("1,x,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("1 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("0,0,0"), std::invalid_argument);
    try {
        parse_poly("1,ab");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("position 2") != std::string::npos);
    }
}
