#include <doctest.h>

#include <random>

#include "qaffine/affine_type.hpp"

using namespace qaffine;

TEST_CASE("family data")
{
    CHECK(AffineData::build({Family::B1, 3}).pstar() == parse_scalar("q^5"));
    CHECK(AffineData::build({Family::A1, 4}).istar(1) == 4);
    CHECK(AffineData::build({Family::D4_3, 2}).gfin() == FinType{'D', 4});
    CHECK(AffineData::build({Family::D1, 5}).istar(4) == 5);
    CHECK(AffineData::build({Family::D1, 6}).istar(5) == 5);
    CHECK(AffineData::build({Family::E6_2, 4}).pstar() == parse_scalar("-1*q^12"));
    CHECK(AffineData::build({Family::D2, 4}).pstar() == parse_scalar("-1*q^8"));
    CHECK(AffineData::build({Family::F4_1, 4}).dd(1, 3) == 2);
    CHECK(AffineData::build({Family::E6_1, 6}).dd(1, 2) == 3);
    CHECK_THROWS_AS(AffineData::build({Family::C1, 2}), RankOutOfRange);
    CHECK_THROWS_AS(AffineData::build({Family::D1, 3}), RankOutOfRange);
}

TEST_CASE("type strings round trip")
{
    for (const AffineType& t : desk_types())
        CHECK(parse_type(t.name()) == t);
    CHECK(parse_type("A4-2") == AffineType{Family::A2_even, 2});
    CHECK(parse_type("A5-2") == AffineType{Family::A2_odd, 3});
    CHECK(parse_type("D5-2") == AffineType{Family::D2, 4});
    CHECK_THROWS_AS(parse_type("X3-1"), ParseError);
    CHECK_THROWS_AS(parse_type("E5-1"), RankOutOfRange);
    CHECK_THROWS_AS(parse_type("A3-3"), RankOutOfRange);
}

TEST_CASE("structural invariants for every desk type")
{
    for (const AffineType& t : desk_types()) {
        AffineData d = AffineData::build(t);
        CAPTURE(t.name());
        CHECK(d.ptilde() == d.pstar() * d.pstar());
        for (int i = 1; i <= d.rank(); ++i)
            CHECK(d.istar(d.istar(i)) == i);
    }
}

TEST_CASE("sigma_eq")
{
    AffineData d5 = AffineData::build({Family::D2, 4});
    CHECK(sigma_eq(d5, {1, parse_scalar("q")}, {1, parse_scalar("-1*q")}));
    AffineData d43 = AffineData::build({Family::D4_3, 2});
    CHECK(sigma_eq(d43, {2, parse_scalar("-1*q")}, {2, parse_scalar("-1*w*q")}));
    CHECK_FALSE(sigma_eq(d43, {1, parse_scalar("-1*q")}, {1, parse_scalar("-1*w*q")}));
    AffineData a5 = AffineData::build({Family::A2_odd, 3});
    CHECK_FALSE(sigma_eq(a5, {1, parse_scalar("q")}, {1, parse_scalar("-1*q")}));
    CHECK(sigma_eq(a5, {3, parse_scalar("q")}, {3, parse_scalar("-1*q")}));

    std::mt19937 rng(11);
    for (const AffineType& t : desk_types()) {
        AffineData d = AffineData::build(t);
        for (int k = 0; k < 30; ++k) {
            int i = 1 + static_cast<int>(rng() % d.rank());
            SigmaPoint a{i, SpectralScalar(rng() % 24, rng() % 3)};
            SigmaPoint b{i, SpectralScalar(rng() % 24, rng() % 3)};
            SigmaPoint c{i, SpectralScalar(rng() % 24, rng() % 3)};
            CHECK(sigma_eq(d, a, a));
            CHECK(sigma_eq(d, a, b) == sigma_eq(d, b, a));
            if (sigma_eq(d, a, b) && sigma_eq(d, b, c))
                CHECK(sigma_eq(d, a, c));
            CHECK(sigma_eq(d, a, b) == (d.canonical(a) == d.canonical(b)));
            if (d.untwisted())
                CHECK(sigma_eq(d, a, b) == (a == b));
        }
    }
}

TEST_CASE("point literals")
{
    SigmaPoint p = parse_point("3@(-q)^5");
    CHECK(p.node == 3);
    CHECK(p.param == parse_scalar("-1*q^5"));
    CHECK_THROWS_AS(parse_point("q^2"), ParseError);
}
