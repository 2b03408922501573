#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "prismforge/curves.hpp"

using namespace prismforge;

namespace {

Curve height_like(long x, long y) {
    Rat rx(x), ry(y);
    return {rx * rx + ry * ry, rx * rx * ry * ry, Rat(0)};
}

bool coprime(long a, long b) { return std::gcd(a, b) == 1; }

}  // namespace

TEST_CASE("on_curve") {
    Curve c{Rat(29), Rat(100), Rat(0)};
    CHECK(on_curve(c, CurvePoint::affine(Rat(2), Rat(18))));
    CHECK(on_curve(c, CurvePoint::infinity()));
    Curve c23{Rat(13), Rat(36), Rat(0)};
    CHECK(!on_curve(c23, CurvePoint::affine(Rat(1), Rat(1))));
}

TEST_CASE("group law basics") {
    Curve c{Rat(29), Rat(100), Rat(0)};
    auto P = CurvePoint::affine(Rat(2), Rat(18));

    CHECK(add(c, P, CurvePoint::infinity()) == P);
    CHECK(add(c, P, negate(P)) == CurvePoint::infinity());

    // adding the two order-4 torsion pairs lands on U = -20 with V = +-40
    auto T1 = CurvePoint::affine(Rat(-10), Rat(30));
    auto T2 = CurvePoint::affine(Rat(-10), Rat(-30));
    REQUIRE(on_curve(c, T1));
    CHECK(add(c, P, T1) == CurvePoint::affine(Rat(-20), Rat(-40)));
    CHECK(add(c, P, T2) == CurvePoint::affine(Rat(-5), Rat(10)));
    CHECK(negate(add(c, P, T1)) == CurvePoint::affine(Rat(-20), Rat(40)));

    auto T3 = CurvePoint::affine(Rat(10), Rat(-70));
    CHECK(add(c, P, T3) == CurvePoint::affine(Rat(80), Rat(840)));

    // doubling on the (i, j) = (1, 2) trapezium curve
    Curve ct{Rat(1), Rat(-16), Rat(0)};
    auto Q = CurvePoint::affine(Rat(4), Rat(4));
    REQUIRE(on_curve(ct, Q));
    CHECK(add(ct, Q, Q) == CurvePoint::affine(Rat(16), Rat(-64)));
}

TEST_CASE("group law is commutative and associative on found points") {
    for (auto [x, y] : {std::pair<long, long>{2, 3}, {5, 2}, {3, 4}}) {
        Curve c = height_like(x, y);
        auto pts = find_points(c, Int(30), Int(1));
        for (const auto& p : pts)
            for (const auto& q : pts) {
                CHECK(add(c, p, q) == add(c, q, p));
                CHECK(on_curve(c, add(c, p, q)));
            }
        for (std::size_t i = 0; i + 2 < pts.size(); i += 3) {
            const auto &p = pts[i], &q = pts[i + 1], &r = pts[i + 2];
            CHECK(add(c, add(c, p, q), r) == add(c, p, add(c, q, r)));
        }
    }
}

TEST_CASE("mul matches repeated addition") {
    Curve c{Rat(29), Rat(100), Rat(0)};
    auto P = CurvePoint::affine(Rat(2), Rat(18));
    CHECK(mul(c, 0, P) == CurvePoint::infinity());
    CHECK(mul(c, 1, P) == P);
    CHECK(mul(c, 2, P) == add(c, P, P));
    CHECK(mul(c, 3, P) == add(c, add(c, P, P), P));
    CHECK(mul(c, -2, P) == negate(add(c, P, P)));
}

TEST_CASE("torsion structures") {
    TorsionInfo t = torsion(height_like(2, 3));
    CHECK(t.structure_label == "Z2xZ4");
    CHECK(t.points.size() == 8);
    CHECK(t.contains(CurvePoint::affine(Rat(0), Rat(0))));
    CHECK(t.contains(CurvePoint::affine(Rat(-4), Rat(0))));
    CHECK(t.contains(CurvePoint::affine(Rat(-9), Rat(0))));
    CHECK(t.contains(CurvePoint::affine(Rat(6), Rat(30))));
    CHECK(t.contains(CurvePoint::affine(Rat(6), Rat(-30))));
    CHECK(t.contains(CurvePoint::affine(Rat(-6), Rat(6))));
    CHECK(t.contains(CurvePoint::affine(Rat(-6), Rat(-6))));

    TorsionInfo t1 = torsion({Rat(12), Rat(-4), Rat(0)});
    CHECK(t1.structure_label == "Z2");
    CHECK(t1.points.size() == 2);
    CHECK(t1.contains(CurvePoint::affine(Rat(0), Rat(0))));

    TorsionInfo t2 = torsion({Rat(0), Rat(-1), Rat(0)});
    CHECK(t2.structure_label == "Z2xZ2");
    CHECK(t2.points.size() == 4);

    CHECK_THROWS(torsion({Rat(2), Rat(1), Rat(0)}));  // (U+1)^2 U, singular

    // every certified order is exact
    for (const auto& [p, order] : t.points) {
        CHECK(mul(height_like(2, 3), order, p) == CurvePoint::infinity());
        for (int k = 1; k < order; ++k)
            CHECK(mul(height_like(2, 3), k, p) != CurvePoint::infinity());
    }
}

TEST_CASE("height-curve torsion is Z2xZ4 with the listed points") {
    for (auto [x, y] :
         {std::pair<long, long>{2, 3}, {5, 2}, {3, 7}, {4, 9}, {11, 6}}) {
        Curve c = height_like(x, y);
        Int xy = Int(x) * y, s = Int(x) + y;
        TorsionInfo t = torsion(c);
        CHECK(t.structure_label == "Z2xZ4");
        auto q4 = CurvePoint::affine(Rat(xy), Rat(xy * s));
        CHECK(t.contains(q4));
        // order-4 points double into 2-torsion
        auto d = add(c, q4, q4);
        CHECK(!d.is_infinity());
        CHECK(d.V().is_zero());
    }
}

TEST_CASE("doubling identity on the trapezium curves") {
    // 2*(j^2, i j^2) = (j^4/i^2, -j^6/i^3) on V^2 = U^3 + i^2 U^2 - j^4 U
    for (long j = 2; j <= 10; ++j)
        for (long i = 1; i < j; ++i) {
            if (!coprime(i, j)) continue;
            Rat ri(i), rj(j);
            Curve c{ri * ri, -(rj * rj * rj * rj), Rat(0)};
            auto P = CurvePoint::affine(rj * rj, ri * rj * rj);
            REQUIRE(on_curve(c, P));
            auto D = add(c, P, P);
            CHECK(D.U() == rj * rj * rj * rj / (ri * ri));
            CHECK(D.V() == -(rj * rj * rj * rj * rj * rj) / (ri * ri * ri));
        }
}

TEST_CASE("known kite-curve points lie on their curves") {
    for (long p = 2; p <= 10; ++p)
        for (long q = 1; q < p; ++q) {
            if (!coprime(p, q)) continue;
            Rat rp(p), rq(q);
            Rat p2 = rp * rp, q2 = rq * rq;
            Rat pq2 = p2 * q2, s = p2 + 4 * q2;

            Curve cx{12 * pq2, -4 * pq2 * s * s, Rat(0)};
            auto Px = CurvePoint::affine(-16 * pq2, 8 * pq2 * (p2 - 4 * q2));
            CHECK(on_curve(cx, Px));
            CHECK(on_curve(cx, negate(Px)));
            if (p != 2 * q) {
                auto D = add(cx, Px, Px);
                Rat num = p2 * p2 + 72 * pq2 + 16 * q2 * q2;
                Rat den = 4 * (p2 - 4 * q2);
                CHECK(D.U() == (num / den) * (num / den));
            }

            Curve czw{p2 * p2 + 18 * pq2 + q2 * q2,
                      12 * pq2 * (p2 * p2 - 4 * q2 * q2), Rat(0)};
            auto P1 = CurvePoint::affine(-16 * pq2, 8 * pq2 * s);
            auto P2 = CurvePoint::affine(-(p2 + q2) * (p2 + q2),
                                         2 * rp * rq * (p2 + q2) * s);
            CHECK(on_curve(czw, P1));
            CHECK(on_curve(czw, P2));
        }
}

TEST_CASE("special parallelogram generators") {
    Curve e1{Rat(12), Rat(-4), Rat(0)};
    Curve e2{Rat(-4), Rat(-36), Rat(0)};
    CHECK(on_curve(e1, CurvePoint::affine(Rat(1), Rat(3))));
    CHECK(on_curve(e2, CurvePoint::affine(Rat(9), Rat(9))));
}

TEST_CASE("find_points") {
    auto has = [](const std::vector<CurvePoint>& pts, long u, long v) {
        for (const auto& p : pts)
            if (p.U() == Rat(u) && p.V() == Rat(v)) return true;
        return false;
    };
    auto p1 = find_points({Rat(29), Rat(100), Rat(0)}, Int(50), Int(1));
    CHECK(has(p1, 2, 18));
    auto p2 = find_points({Rat(12), Rat(-4), Rat(0)}, Int(10), Int(1));
    CHECK(has(p2, 1, 3));
    auto p3 = find_points({Rat(-4), Rat(-36), Rat(0)}, Int(10), Int(1));
    CHECK(has(p3, 9, 9));

    // denominator scan picks up points with U = m/e^2
    Curve c{Rat(29), Rat(100), Rat(0)};
    for (const auto& p : find_points(c, Int(50), Int(3))) {
        CHECK(on_curve(c, p));
        CHECK(p.V().sign() >= 0);
    }
}

TEST_CASE("combine") {
    Curve c{Rat(29), Rat(100), Rat(0)};
    GeneratorSet gens{{CurvePoint::affine(Rat(2), Rat(18))}, 1};
    auto T = CurvePoint::affine(Rat(-10), Rat(30));
    auto r = combine(c, gens, {1}, T);
    CHECK((r == CurvePoint::affine(Rat(-20), Rat(-40)) ||
           r == CurvePoint::affine(Rat(-20), Rat(40))));
    CHECK(combine(c, gens, {0}, CurvePoint::infinity()) ==
          CurvePoint::infinity());
    CHECK(combine(c, gens, {1}, CurvePoint::infinity()) ==
          CurvePoint::affine(Rat(2), Rat(18)));
}
