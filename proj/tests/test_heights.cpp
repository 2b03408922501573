#include <doctest.h>

#include <stdexcept>

#include "prismforge/heights.hpp"

using namespace prismforge;

TEST_CASE("height_curve") {
    CHECK(height_curve(Int(2), Int(3)) == Curve{Rat(13), Rat(36), Rat(0)});
    CHECK(height_curve(Int(5), Int(2)) == Curve{Rat(29), Rat(100), Rat(0)});
    CHECK(height_curve(Int(1), Int(1)) == Curve{Rat(2), Rat(1), Rat(0)});
    CHECK_THROWS_AS(height_curve(Int(0), Int(1)), std::invalid_argument);
}

TEST_CASE("heights_from_point") {
    auto hs = heights_from_point(Int(5), Int(2),
                                 CurvePoint::affine(Rat(2), Rat(18)));
    CHECK(hs == std::set<Rat>{Rat(8, 3), Rat(15, 4)});
    Rat product(1);
    for (const Rat& h : hs) product *= h;
    CHECK(product == Rat(10));

    // torsion input is rejected
    CHECK_THROWS_AS(heights_from_point(Int(5), Int(2),
                                       CurvePoint::affine(Rat(10), Rat(70))),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        heights_from_point(Int(5), Int(2), CurvePoint::infinity()),
        std::invalid_argument);
}

TEST_CASE("pair product law over several curves") {
    // whenever the bounded scan yields a free point, its two heights
    // multiply to x*y
    for (auto [x, y] : {std::pair<long, long>{5, 2}, {15, 6}, {10, 4},
                        {20, 8}, {25, 10}}) {
        Curve c = height_curve(Int(x), Int(y));
        for (const auto& p : find_points(c, Int(500), Int(1))) {
            if (p.V().is_zero()) continue;
            std::set<Rat> hs;
            try {
                hs = heights_from_point(Int(x), Int(y), p);
            } catch (const std::invalid_argument&) {
                continue;  // torsion
            }
            if (hs.size() != 2) continue;
            Rat product(1);
            for (const Rat& h : hs) product *= h;
            CHECK(product == Rat(Int(x) * y));
        }
    }
}

TEST_CASE("compatible_heights") {
    CHECK(compatible_heights(Int(2), Int(3)).empty());

    auto hs = compatible_heights(Int(5), Int(2));
    CHECK(hs == std::vector<Rat>{Rat(8, 3), Rat(15, 4)});

    // scaling by 3 recovers the integer triple (15, 6, 8)
    CHECK(Rat(3) * Rat(8, 3) == Rat(8));

    // soundness
    for (const Rat& h : hs) {
        CHECK(is_square(Rat(25) + h * h));
        CHECK(is_square(Rat(4) + h * h));
    }
}

TEST_CASE("compatible_heights scaling covariance") {
    auto base = compatible_heights(Int(5), Int(2));
    for (long k : {2L, 3L, 5L}) {
        auto scaled = compatible_heights(Int(5 * k), Int(2 * k));
        for (const Rat& h : base) {
            bool found = false;
            for (const Rat& s : scaled)
                if (s == Rat(k) * h) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("compatible_heights on the singular x = y curve") {
    // V^2 = U^3 + 2U^2 + U is singular; the smooth locus still yields
    // heights, e.g. h = 4/3 with 1 + 16/9 = (5/3)^2
    auto hs = compatible_heights(Int(1), Int(1));
    for (const Rat& h : hs) CHECK(is_square(Rat(1) + h * h));
    bool has_43 = false;
    for (const Rat& h : hs)
        if (h == Rat(4, 3)) has_43 = true;
    CHECK(has_43);
}

TEST_CASE("filter_heights") {
    std::vector<Rat> sixty{Rat(60)};
    CHECK(filter_heights(sixty, {Int(91), Int(80), Int(45), Int(63), Int(45)})
              .size() == 1);
    CHECK(filter_heights(sixty, {Int(35)}).empty());
    CHECK(filter_heights({}, {Int(5)}).empty());
}
