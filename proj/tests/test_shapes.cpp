#include <doctest.h>

#include <random>
#include <stdexcept>
#include <string>

#include "prismforge/shapes.hpp"

using namespace prismforge;

namespace {

PrismCandidate cand(const PrismBase& base, const Rat& h) {
    return PrismCandidate{base, h};
}

Rat random_rat(std::mt19937& rng, int lo, int hi) {
    std::uniform_int_distribution<int> num(lo, hi), den(1, hi);
    int n = num(rng), d = den(rng);
    if (n == 0) n = 1;
    return Rat(n, d);
}

}  // namespace

TEST_CASE("classify worked examples") {
    auto trap = trapezium_base(Int(364), Int(275), Int(320));
    REQUIRE(trap);
    CHECK(trap->v == Rat(450));
    auto rep = classify(cand(*trap, Rat(240)));
    CHECK(rep.required_count == 4);
    CHECK(rep.square_count == 4);
    CHECK(rep.perfect);
    CHECK(rep.integral);

    PrismBase gen;
    gen.kind = ShapeKind::GENERAL;
    gen.x = Rat(91); gen.y = Rat(80); gen.z = Rat(45);
    gen.w = Rat(63); gen.u = Rat(45); gen.v = Rat(35);
    auto grep = classify(cand(gen, Rat(60)));
    CHECK(grep.required_count == 6);
    CHECK(grep.square_count == 5);
    CHECK(!grep.perfect);
    for (const auto& c : grep.conditions)
        if (c.length_name == "v") CHECK(!c.square);

    PrismBase par;
    par.kind = ShapeKind::PARALLELOGRAM;
    par.x = Rat(2522); par.y = Rat(16199);
    par.z = Rat(16587); par.w = Rat(16199);
    par.u = par.z; par.v = par.w;
    auto prep = classify(cand(par, Rat(9240)));
    CHECK(prep.required_count == 4);
    CHECK(prep.square_count == 4);
    CHECK(prep.perfect);
}

TEST_CASE("classify is invariant under uniform integer scaling") {
    auto trap = trapezium_base(Int(364), Int(275), Int(320));
    REQUIRE(trap);
    auto rep1 = classify(cand(*trap, Rat(240)));
    PrismBase scaled = *trap;
    scaled.x *= 7; scaled.y *= 7; scaled.z *= 7;
    scaled.w *= 7; scaled.u *= 7; scaled.v *= 7;
    auto rep2 = classify(cand(scaled, Rat(240 * 7)));
    CHECK(rep1.square_count == rep2.square_count);
    for (std::size_t i = 0; i < rep1.conditions.size(); ++i)
        CHECK(rep1.conditions[i].square == rep2.conditions[i].square);
}

TEST_CASE("general_quad_assemble") {
    auto b1 = general_quad_assemble(Int(91), Int(63), Rat(25, 26), Int(80),
                                    Int(45));
    REQUIRE(b1);
    CHECK(b1->v == Rat(35));
    CHECK(b1->u == Rat(45));
    CHECK(*b1->cos_beta == Rat(113, 130));
    CHECK(b1->geometry_status == GeometryStatus::DEGENERATE);

    auto b2 = general_quad_assemble(Int(128), Int(56), Rat(23, 28), Int(56),
                                    Int(36));
    REQUIRE(b2);
    CHECK(b2->v == Rat(88));
    CHECK(b2->u == Rat(88));
    CHECK(b2->geometry_status == GeometryStatus::CONVEX);

    auto b3 = general_quad_assemble(Int(152), Int(36), Rat(1, 16), Int(140),
                                    Int(56));
    REQUIRE(b3);
    CHECK(b3->v == Rat(154));
    CHECK(b3->u == Rat(88));
    CHECK(*b3->cos_beta == Rat(23, 28));

    CHECK_THROWS_AS(
        general_quad_assemble(Int(5), Int(4), Rat(3, 2), Int(4), Int(3)),
        std::invalid_argument);
}

TEST_CASE("trapezium_base") {
    CHECK(trapezium_base(Int(364), Int(275), Int(320))->v == Rat(450));
    CHECK(trapezium_base(Int(1152), Int(507), Int(780))->v == Rat(1092));
    CHECK(!trapezium_base(Int(3), Int(1), Int(2)));
    CHECK_THROWS_AS(trapezium_base(Int(2), Int(3), Int(1)),
                    std::invalid_argument);
}

TEST_CASE("trapezium_param") {
    PrismBase b = trapezium_param(Rat(1, 2), Rat(1, 3));
    CHECK(b.x == Rat(5, 3));
    CHECK(b.y == Rat(7, 9));
    CHECK(b.z == Rat(8, 9));
    CHECK(b.v == Rat(13, 9));
    CHECK(b.v * b.v == b.z * b.z + b.x * b.y);

    auto scaled = primitive_scale(b, Rat(1));
    CHECK(scaled.base.x == Rat(15));
    CHECK(scaled.base.y == Rat(7));
    CHECK(scaled.base.z == Rat(8));
    CHECK(scaled.base.v == Rat(13));
    CHECK(scaled.h == Rat(9));

    CHECK_THROWS_AS(trapezium_param(Rat(3, 2), Rat(1, 3)),
                    std::invalid_argument);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(1, 99);
    for (int i = 0; i < 100; ++i) {
        Rat c(num(rng), 100), d(num(rng), 100);
        PrismBase base = trapezium_param(c, d);
        CHECK(base.v * base.v == base.z * base.z + base.x * base.y);
    }
}

TEST_CASE("trap_special_chain") {
    auto r12 = trap_special_chain(Int(1), Int(2));
    CHECK(r12.d == Rat(6, 5));
    CHECK(!r12.y_cond);
    auto r13 = trap_special_chain(Int(1), Int(3));
    CHECK(!r13.y_cond);
    CHECK_THROWS_AS(trap_special_chain(Int(2), Int(4)), std::invalid_argument);
}

TEST_CASE("cyclic_base") {
    PrismBase b = cyclic_base(Rat(11, 2), Rat(4), Rat(2));
    CHECK(b.x == Rat(187));
    CHECK(b.y == Rat(250));
    CHECK(b.z == Rat(425));
    CHECK(b.w == Rat(520));
    CHECK(b.u == Rat(399));
    CHECK(b.v == Rat(525));
    CHECK(b.geometry_status == GeometryStatus::CONVEX);
    CHECK(b.u * b.v == b.x * b.z + b.y * b.w);  // Ptolemy

    // degenerate factor makes a length non-positive
    CHECK(cyclic_base(Rat(1), Rat(1), Rat(1)).geometry_status ==
          GeometryStatus::INVALID);

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(1, 12), den(1, 12);
    int checked = 0;
    while (checked < 100) {
        Rat f(num(rng), den(rng)), g(num(rng), den(rng)), t(num(rng), den(rng));
        PrismBase base = cyclic_base(f, g, t);
        if (base.geometry_status == GeometryStatus::INVALID) continue;
        CHECK(base.u * base.v == base.x * base.z + base.y * base.w);
        ++checked;
    }
}

TEST_CASE("parallelogram_base") {
    auto b = parallelogram_base(Int(2522), Int(16199), Rat(13, 167));
    REQUIRE(b);
    CHECK(b->z == Rat(16587));
    CHECK(b->w == Rat(16199));
    CHECK(!parallelogram_base(Int(1), Int(1), Rat(0)));
    auto small = parallelogram_base(Int(26), Int(167), Rat(13, 167));
    REQUIRE(small);
    CHECK(small->z == Rat(171));
    CHECK(small->w == Rat(167));
    CHECK_THROWS_AS(parallelogram_base(Int(1), Int(1), Rat(2)),
                    std::invalid_argument);
}

TEST_CASE("special_parallelogram_base") {
    PrismBase b = special_parallelogram_base(Int(13), Int(1));
    CHECK(b.x == Rat(26));
    CHECK(b.y == Rat(167));
    CHECK(b.z == Rat(171));
    CHECK(b.w == Rat(167));
    CHECK(*b.cos_alpha == Rat(13, 167));

    PrismBase t = special_parallelogram_base(Int(2), Int(1));
    CHECK(t.x == Rat(4));
    CHECK(t.y == Rat(2));
    CHECK(t.z == Rat(6));

    CHECK_THROWS_AS(special_parallelogram_base(Int(1), Int(1)),
                    std::invalid_argument);

    std::mt19937 rng(13);
    std::uniform_int_distribution<int> pv(2, 60), qv(1, 20);
    for (int i = 0; i < 100; ++i) {
        Int p = pv(rng), q = qv(rng);
        if (p * p <= 2 * q * q) continue;
        PrismBase s = special_parallelogram_base(p, q);
        CHECK(s.z * s.z == 2 * s.x * s.x + s.y * s.y);
    }
}

TEST_CASE("kite_base") {
    PrismBase b = kite_base(Rat(2), Rat(5));
    CHECK(b.x == Rat(25));
    CHECK(b.y == Rat(52));
    CHECK(b.z == Rat(63));
    CHECK(b.w == Rat(40));
    CHECK(*b.cos_alpha == Rat(3, 5));
    CHECK(*b.cos_beta == Rat(12, 13));

    PrismBase c = kite_base(Rat(3, 2), Rat(2));
    CHECK(c.x == Rat(13));
    CHECK(c.y == Rat(15));
    CHECK(c.z == Rat(14));
    CHECK(c.w == Rat(24));

    CHECK_THROWS_AS(kite_base(Rat(1), Rat(2)), std::invalid_argument);

    // defining relations and the w != x, w != y property
    for (const Rat& f : enumerate_rationals(Int(8), Rat(1)))
        for (const Rat& g : enumerate_rationals(Int(8), Rat(1))) {
            PrismBase k = kite_base(f, g);
            CHECK(k.w != k.x);
            CHECK(k.w != k.y);
            Rat sa = half_angle(f).sin, sb = half_angle(g).sin;
            CHECK(k.z == k.x * *k.cos_alpha + k.y * *k.cos_beta);
            CHECK(k.w == 2 * k.x * sa);
            CHECK(k.w == 2 * k.y * sb);
        }
}

TEST_CASE("kite_g_from_k") {
    CHECK(*kite_g_from_k(Rat(1)) == Rat(1));
    CHECK(*kite_g_from_k(Rat(13, 5)) == Rat(5));
    CHECK(!kite_g_from_k(Rat(2)));
    CHECK_THROWS_AS(kite_g_from_k(Rat(1, 2)), std::invalid_argument);
}

TEST_CASE("rhombus_base") {
    PrismBase b = rhombus_base(Int(4), Int(3));
    CHECK(b.x == Rat(25));
    CHECK(b.z == Rat(14));
    CHECK(b.w == Rat(48));
    CHECK(b.y == b.x);
    PrismBase c = rhombus_base(Int(3), Int(2));
    CHECK(c.x == Rat(13));
    CHECK(c.z == Rat(10));
    CHECK(c.w == Rat(24));
    CHECK_THROWS_AS(rhombus_base(Int(4), Int(2)), std::invalid_argument);
    CHECK_THROWS_AS(rhombus_base(Int(2), Int(3)), std::invalid_argument);

    std::mt19937 rng(17);
    std::uniform_int_distribution<int> mv(2, 50), nv(1, 49);
    for (int i = 0; i < 100; ++i) {
        Int m = mv(rng), n = nv(rng);
        if (!(m > n) || gcd(m, n) != 1) continue;
        PrismBase r = rhombus_base(m, n);
        CHECK(r.z * r.z + r.w * r.w == 4 * r.x * r.x);
    }
}

TEST_CASE("rhombus scaled examples") {
    PrismBase b = rhombus_base(Int(4), Int(3));
    auto c = primitive_scale(b, Rat(40, 3));
    CHECK(c.base.x == Rat(75));
    CHECK(c.base.z == Rat(42));
    CHECK(c.base.w == Rat(144));
    CHECK(c.h == Rat(40));
    auto rep = classify(c);
    CHECK(rep.square_count == 2);
    for (const auto& cond : rep.conditions) {
        if (cond.length_name == "w") CHECK(!cond.square);
        else CHECK(cond.square);
    }

    PrismBase b2 = rhombus_base(Int(3), Int(2));
    auto c2 = primitive_scale(b2, Rat(315, 76));
    CHECK(c2.base.x == Rat(988));
    CHECK(c2.base.z == Rat(760));
    CHECK(c2.base.w == Rat(1824));
    CHECK(c2.h == Rat(315));
    auto rep2 = classify(c2);
    CHECK(rep2.square_count == 2);
    for (const auto& cond : rep2.conditions) {
        if (cond.length_name == "z") CHECK(!cond.square);
        else CHECK(cond.square);
    }
}

TEST_CASE("kite near-miss candidates") {
    // primitive scaling of (2, 5) reproduces the small near-perfect kite
    auto c = primitive_scale(kite_base(Rat(2), Rat(5)), Rat(105, 4));
    CHECK(c.base.x == Rat(100));
    CHECK(c.base.y == Rat(208));
    CHECK(c.base.z == Rat(252));
    CHECK(c.base.w == Rat(160));
    CHECK(c.h == Rat(105));
    auto rep = classify(c);
    CHECK(rep.square_count == 3);

    // kite_base already cleared the parameter denominators (scale 500),
    // so the matching height is (24/5) * 500
    auto c2 = primitive_scale(kite_base(Rat(13, 10), Rat(7, 5)), Rat(2400));
    CHECK(c2.base.x == Rat(1883));
    CHECK(c2.base.y == Rat(1924));
    CHECK(c2.base.z == Rat(1107));
    CHECK(c2.base.w == Rat(3640));
    CHECK(c2.h == Rat(2400));
    auto rep2 = classify(c2);
    CHECK(rep2.square_count == 3);
}

TEST_CASE("primitive_scale") {
    PrismBase b = rhombus_base(Int(4), Int(3));
    auto same = primitive_scale(b, Rat(7));
    CHECK(same.base.x == b.x);
    CHECK(same.h == Rat(7));
    CHECK_THROWS_AS(primitive_scale(b, Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(primitive_scale(b, Rat(-1)), std::invalid_argument);
}

TEST_CASE("shape names") {
    CHECK(shape_from_name("kite") == ShapeKind::KITE);
    CHECK(!shape_from_name("pentagon"));
    CHECK(std::string(geometry_status_name(GeometryStatus::DEGENERATE)) ==
          "degenerate");
}
