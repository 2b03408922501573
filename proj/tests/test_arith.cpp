#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "prismforge/arith.hpp"

using namespace prismforge;

TEST_CASE("Rat canonical form and accessors") {
    CHECK(Rat(4, 6) == Rat(2, 3));
    CHECK(Rat(-4, 6) == Rat(-2, 3));
    CHECK(Rat(4, -6) == Rat(-2, 3));
    CHECK(Rat(2, 3).num() == 2);
    CHECK(Rat(2, 3).den() == 3);
    CHECK(Rat(7).is_integer());
    CHECK(!Rat(7, 2).is_integer());
    CHECK(Rat(0).is_zero());
    CHECK(Rat(-5, 3).sign() == -1);
    CHECK(Rat(3, 7).height() == 7);
    CHECK(Rat(-9, 2).height() == 9);
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), std::invalid_argument);
}

TEST_CASE("Rat parse and str round trip") {
    CHECK(Rat::parse("3/4") == Rat(3, 4));
    CHECK(Rat::parse("-3/4") == Rat(-3, 4));
    CHECK(Rat::parse("12") == Rat(12));
    CHECK(!Rat::parse(""));
    CHECK(!Rat::parse("1/0"));
    CHECK(!Rat::parse("a/b"));
    CHECK(!Rat::parse("1.5"));
    CHECK(Rat(3, 4).str() == "3/4");
    CHECK(Rat(-8, 2).str() == "-4");
    CHECK(*Rat::parse(Rat(-91, 60).str()) == Rat(-91, 60));
}

TEST_CASE("isqrt") {
    auto r0 = isqrt(Int(0));
    CHECK(r0.root == 0);
    CHECK(r0.exact);
    auto r1 = isqrt(Int(190096));
    CHECK(r1.root == 436);
    CHECK(r1.exact);
    auto r2 = isqrt(Int(4825));
    CHECK(r2.root == 69);
    CHECK(!r2.exact);
    CHECK_THROWS_AS(isqrt(Int(-1)), std::invalid_argument);
}

TEST_CASE("is_square and rat_sqrt") {
    CHECK(is_square(Rat(625, 16)));
    CHECK(is_square(Rat(1)));
    CHECK(!is_square(Rat(-4)));
    CHECK(!is_square(Rat(2)));
    CHECK(*rat_sqrt(Rat(625, 16)) == Rat(25, 4));
    CHECK(!rat_sqrt(Rat(5, 4)));
}

TEST_CASE("pyth_ratio and inverse") {
    CHECK(pyth_ratio(Rat(1)) == Rat(0));
    CHECK(pyth_ratio(Rat(3)) == Rat(4, 3));
    CHECK(pyth_ratio(Rat(10, 3)) == Rat(91, 60));
    CHECK_THROWS_AS(pyth_ratio(Rat(0)), std::domain_error);

    CHECK(*pyth_ratio_inverse(Rat(0)) == Rat(1));
    CHECK(*pyth_ratio_inverse(Rat(91, 60)) == Rat(10, 3));
    CHECK(!pyth_ratio_inverse(Rat(1, 2)));
}

TEST_CASE("pyth_ratio symmetry P(r) = P(-1/r)") {
    for (const Rat& r : enumerate_rationals(Int(20), Rat(0))) {
        CHECK(pyth_ratio(r) == pyth_ratio(Rat(-1) / r));
        if (r > Rat(1)) CHECK(*pyth_ratio_inverse(pyth_ratio(r)) == r);
    }
}

TEST_CASE("half_angle") {
    CHECK(half_angle(Rat(1)).cos == Rat(0));
    CHECK(half_angle(Rat(1)).sin == Rat(1));
    CHECK(half_angle(Rat(2)).cos == Rat(3, 5));
    CHECK(half_angle(Rat(2)).sin == Rat(4, 5));
    CHECK(half_angle(Rat(11, 2)).cos == Rat(117, 125));
    CHECK(half_angle(Rat(11, 2)).sin == Rat(44, 125));
    for (const Rat& f : enumerate_rationals(Int(12), Rat(-4), Rat(4))) {
        CosSin cs = half_angle(f);
        CHECK(cs.cos * cs.cos + cs.sin * cs.sin == Rat(1));
    }
}

TEST_CASE("enumerate_rationals") {
    auto tiny = enumerate_rationals(Int(2), Rat(0));
    CHECK(tiny == std::vector<Rat>{Rat(1), Rat(1, 2), Rat(2)});

    auto above_one = enumerate_rationals(Int(3), Rat(1));
    CHECK(above_one == std::vector<Rat>{Rat(2), Rat(3, 2), Rat(3)});

    auto big = enumerate_rationals(Int(13), Rat(1));
    auto has = [&big](const Rat& v) {
        return std::find(big.begin(), big.end(), v) != big.end();
    };
    CHECK(has(Rat(10, 3)));
    CHECK(has(Rat(8, 3)));
    CHECK(has(Rat(3)));

    // each value exactly once, heights ascending, within the bound and range
    Int prev_height = 0;
    std::set<Rat> seen;
    for (const Rat& v : big) {
        CHECK(v > Rat(1));
        CHECK(v.height() <= 13);
        CHECK(v.height() >= prev_height);
        prev_height = v.height();
        CHECK(seen.insert(v).second);
    }

    auto bounded = enumerate_rationals(Int(5), Rat(0), Rat(1));
    for (const Rat& v : bounded) {
        CHECK(v > Rat(0));
        CHECK(v < Rat(1));
    }
    CHECK_THROWS_AS(enumerate_rationals(Int(0), Rat(0)), std::invalid_argument);
}

TEST_CASE("RationalEnumerator cursor access matches values") {
    RationalEnumerator e(Int(9), Rat(1));
    CHECK(e.size() == e.values().size());
    for (std::size_t i = 0; i < e.size(); ++i) CHECK(e.at(i) == e.values()[i]);
}
