#include "prismforge/shapes.hpp"

#include <stdexcept>

namespace prismforge {

namespace {

Rat sq(const Rat& r) { return r * r; }

// least positive rational scale making every listed value integral, with the
// common integer factor divided out
Rat primitive_factor(const std::vector<Rat>& vals) {
    Int l = 1, g = 0;
    for (const Rat& v : vals) l = lcm(l, v.den());
    for (const Rat& v : vals) g = gcd(g, Int(v.num() * (l / v.den())));
    if (g == 0) g = 1;
    return Rat(l, g);
}

}  // namespace

const char* shape_name(ShapeKind k) {
    switch (k) {
        case ShapeKind::GENERAL: return "general";
        case ShapeKind::TRAPEZIUM: return "trapezium";
        case ShapeKind::CYCLIC: return "cyclic";
        case ShapeKind::PARALLELOGRAM: return "parallelogram";
        case ShapeKind::KITE: return "kite";
        case ShapeKind::RHOMBUS: return "rhombus";
    }
    throw std::logic_error("shape_name: unreachable");
}

std::optional<ShapeKind> shape_from_name(const std::string& name) {
    for (ShapeKind k : {ShapeKind::GENERAL, ShapeKind::TRAPEZIUM,
                        ShapeKind::CYCLIC, ShapeKind::PARALLELOGRAM,
                        ShapeKind::KITE, ShapeKind::RHOMBUS})
        if (name == shape_name(k)) return k;
    return std::nullopt;
}

const char* geometry_status_name(GeometryStatus s) {
    switch (s) {
        case GeometryStatus::CONVEX: return "convex";
        case GeometryStatus::DEGENERATE: return "degenerate";
        case GeometryStatus::INVALID: return "invalid";
    }
    throw std::logic_error("geometry_status_name: unreachable");
}

std::vector<std::pair<std::string, Rat>> PrismBase::condition_lengths() const {
    switch (kind) {
        case ShapeKind::GENERAL:
        case ShapeKind::CYCLIC:
            return {{"x", x}, {"y", y}, {"z", z}, {"w", w}, {"u", u}, {"v", v}};
        case ShapeKind::TRAPEZIUM:
            return {{"x", x}, {"y", y}, {"z", z}, {"v", v}};
        case ShapeKind::PARALLELOGRAM:
        case ShapeKind::KITE:
            return {{"x", x}, {"y", y}, {"z", z}, {"w", w}};
        case ShapeKind::RHOMBUS:
            return {{"x", x}, {"z", z}, {"w", w}};
    }
    throw std::logic_error("condition_lengths: unreachable");
}

DiagonalReport classify(const PrismCandidate& c) {
    DiagonalReport rep;
    const Rat h2 = sq(c.h);
    bool integral = c.h.is_integer();
    for (const auto& [name, value] : c.base.condition_lengths()) {
        bool square = is_square(sq(value) + h2);
        rep.conditions.push_back({name, value, square});
        if (square) ++rep.square_count;
        if (!value.is_integer()) integral = false;
    }
    rep.required_count = static_cast<int>(rep.conditions.size());
    rep.integral = integral;
    rep.perfect = rep.square_count == rep.required_count && integral &&
                  c.base.geometry_status != GeometryStatus::INVALID;
    return rep;
}

std::optional<PrismBase> general_quad_assemble(const Int& x, const Int& w,
                                               const Rat& cos_alpha,
                                               const Int& y, const Int& z) {
    if (abs(cos_alpha) >= Rat(1))
        throw std::invalid_argument("general_quad_assemble: |cos alpha| >= 1");
    Rat rx(x), rw(w), ry(y), rz(z);
    auto v = rat_sqrt(sq(rx) + sq(rw) - 2 * rx * rw * cos_alpha);
    if (!v) return std::nullopt;

    Rat c1 = (sq(rx) + sq(*v) - sq(rw)) / (2 * rx * *v);
    Rat c2 = (sq(*v) + sq(ry) - sq(rz)) / (2 * *v * ry);
    Rat s1sq = Rat(1) - sq(c1);
    Rat s2sq = Rat(1) - sq(c2);
    if (s1sq.sign() < 0 || s2sq.sign() < 0) return std::nullopt;
    auto s1s2 = rat_sqrt(s1sq * s2sq);
    if (!s1s2) return std::nullopt;

    Rat cos_b = c1 * c2 - *s1s2;
    auto u = rat_sqrt(sq(rx) + sq(ry) - 2 * rx * ry * cos_b);
    if (!u) return std::nullopt;

    PrismBase base;
    base.kind = ShapeKind::GENERAL;
    base.x = rx;
    base.y = ry;
    base.z = rz;
    base.w = rw;
    base.u = *u;
    base.v = *v;
    base.params = {rx, rw, cos_alpha, ry, rz};
    base.cos_alpha = cos_alpha;
    base.cos_beta = cos_b;  // the assembled angle at B
    base.geometry_status = (s1sq.is_zero() || s2sq.is_zero())
                               ? GeometryStatus::DEGENERATE
                               : GeometryStatus::CONVEX;
    return base;
}

std::optional<PrismBase> trapezium_base(const Int& x, const Int& y,
                                        const Int& z) {
    if (!(x > y && y >= 1 && z >= 1))
        throw std::invalid_argument("trapezium_base: need x > y >= 1, z >= 1");
    Rat rx(x), ry(y), rz(z);
    auto v = rat_sqrt(sq(rz) + rx * ry);
    if (!v) return std::nullopt;

    PrismBase base;
    base.kind = ShapeKind::TRAPEZIUM;
    base.x = rx;
    base.y = ry;
    base.z = rz;
    base.w = rz;
    base.u = *v;
    base.v = *v;
    base.params = {rx, ry, rz};
    base.cos_alpha = (rx - ry) / (2 * rz);

    // planar height of the trapezium; zero or negative means the legs are
    // too short to separate the parallel sides
    Rat planar = sq(rz) - sq(rx - ry) / 4;
    base.geometry_status = planar.sign() > 0    ? GeometryStatus::CONVEX
                           : planar.is_zero()   ? GeometryStatus::DEGENERATE
                                                : GeometryStatus::INVALID;
    return base;
}

PrismBase trapezium_param(const Rat& c, const Rat& d) {
    if (!(c > Rat(0) && c < Rat(1) && d > Rat(0) && d < Rat(1)))
        throw std::invalid_argument("trapezium_param: need 0 < c, d < 1");
    Rat x = 2 * (c + d);
    Rat y = 2 * d * (1 + c * d);
    Rat z = Rat(1) - sq(d);
    Rat v = 2 * c * d + Rat(1) + sq(d);

    PrismBase base;
    base.kind = ShapeKind::TRAPEZIUM;
    base.x = x;
    base.y = y;
    base.z = z;
    base.w = z;
    base.u = v;
    base.v = v;
    base.params = {c, d};
    base.cos_alpha = (x - y) / (2 * z);
    base.geometry_status = GeometryStatus::CONVEX;
    return base;
}

TrapChainResult trap_special_chain(const Int& i, const Int& j) {
    if (!(i > 0 && i < j && gcd(i, j) == 1))
        throw std::invalid_argument(
            "trap_special_chain: need coprime 0 < i < j");
    Int i2 = i * i, j2 = j * j;
    Int i4 = i2 * i2, j4 = j2 * j2;
    TrapChainResult r;
    r.d = Rat(j * (j2 - i2), i * (i2 + j2));
    r.x_cond = is_square(Rat(i4 * i4 + 3 * i4 * j4 - 2 * i2 * j4 * j2 +
                             2 * j4 * j4));
    r.y_cond = is_square(Rat(i4 + 2 * i2 * j2 + 5 * j4));
    return r;
}

PrismBase cyclic_base(const Rat& f, const Rat& g, const Rat& t) {
    Rat f2 = sq(f), g2 = sq(g), t2 = sq(t);
    Rat x = f * (g2 + 1) * (t2 + 1);
    Rat y = g * (f2 + 1) * (t2 + 1);
    Rat z = t * (f2 + 1) * (g2 + 1);
    Rat w = (f * (g + t) + g * t - 1) * (f * (g * t - 1) - g - t);
    Rat u = (f + g) * (f * g - 1) * (1 + t2);
    Rat v = (g + t) * (g * t - 1) * (1 + f2);

    PrismBase base;
    base.kind = ShapeKind::CYCLIC;
    base.params = {f, g, t};
    if (x.sign() <= 0 || y.sign() <= 0 || z.sign() <= 0 || w.sign() <= 0 ||
        u.sign() <= 0 || v.sign() <= 0) {
        base.x = x; base.y = y; base.z = z;
        base.w = w; base.u = u; base.v = v;
        base.geometry_status = GeometryStatus::INVALID;
        return base;
    }
    Rat s = primitive_factor({x, y, z, w, u, v});
    base.x = x * s; base.y = y * s; base.z = z * s;
    base.w = w * s; base.u = u * s; base.v = v * s;
    base.geometry_status = GeometryStatus::CONVEX;
    return base;
}

std::optional<PrismBase> parallelogram_base(const Int& x, const Int& y,
                                            const Rat& cos_alpha) {
    if (abs(cos_alpha) >= Rat(1))
        throw std::invalid_argument("parallelogram_base: |cos alpha| >= 1");
    Rat rx(x), ry(y);
    auto z = rat_sqrt(sq(rx) + sq(ry) + 2 * rx * ry * cos_alpha);
    if (!z) return std::nullopt;
    auto w = rat_sqrt(sq(rx) + sq(ry) - 2 * rx * ry * cos_alpha);
    if (!w) return std::nullopt;

    PrismBase base;
    base.kind = ShapeKind::PARALLELOGRAM;
    base.x = rx;
    base.y = ry;
    base.z = *z;
    base.w = *w;
    base.u = *z;
    base.v = *w;
    base.params = {rx, ry, cos_alpha};
    base.cos_alpha = cos_alpha;
    base.geometry_status = GeometryStatus::CONVEX;
    return base;
}

PrismBase special_parallelogram_base(const Int& p, const Int& q) {
    if (p * p <= 2 * q * q)
        throw std::invalid_argument(
            "special_parallelogram_base: need p^2 > 2q^2");
    Rat x(2 * p * q), y(p * p - 2 * q * q), z(p * p + 2 * q * q);

    PrismBase base;
    base.kind = ShapeKind::PARALLELOGRAM;
    base.x = x;
    base.y = y;
    base.z = z;
    base.w = y;
    base.u = z;
    base.v = y;
    base.params = {Rat(p), Rat(q)};
    base.cos_alpha = x / (2 * y);
    base.geometry_status = GeometryStatus::CONVEX;
    return base;
}

PrismBase kite_base(const Rat& f, const Rat& g) {
    if (!(f > Rat(1) && g > Rat(1)))
        throw std::invalid_argument("kite_base: need f, g > 1");
    Rat f2 = sq(f), g2 = sq(g);
    Rat x = g * (f2 + 1);
    Rat y = f * (g2 + 1);
    Rat z = f * (g2 - 1) + g * (f2 - 1);
    Rat w = 4 * f * g;

    Rat s = primitive_factor({x, y, z, w});
    PrismBase base;
    base.kind = ShapeKind::KITE;
    base.x = x * s;
    base.y = y * s;
    base.z = z * s;
    base.w = w * s;
    base.u = base.z;
    base.v = base.w;
    base.params = {f, g};
    base.cos_alpha = half_angle(f).cos;
    base.cos_beta = half_angle(g).cos;
    base.geometry_status = GeometryStatus::CONVEX;
    return base;
}

std::optional<Rat> kite_g_from_k(const Rat& k) {
    if (k < Rat(1))
        throw std::invalid_argument("kite_g_from_k: need k >= 1");
    auto s = rat_sqrt(sq(k) - 1);
    if (!s) return std::nullopt;
    return k + *s;
}

PrismBase rhombus_base(const Int& m, const Int& n) {
    if (!(m > n && n >= 1 && gcd(m, n) == 1))
        throw std::invalid_argument(
            "rhombus_base: need coprime m > n >= 1");
    Rat x(m * m + n * n), z(2 * (m * m - n * n)), w(4 * m * n);

    PrismBase base;
    base.kind = ShapeKind::RHOMBUS;
    base.x = x;
    base.y = x;
    base.z = z;
    base.w = w;
    base.u = z;
    base.v = w;
    base.params = {Rat(m), Rat(n)};
    base.geometry_status = GeometryStatus::CONVEX;
    return base;
}

PrismCandidate primitive_scale(const PrismBase& base, const Rat& h) {
    if (h.sign() <= 0)
        throw std::invalid_argument("primitive_scale: need h > 0");
    Rat s = primitive_factor({base.x, base.y, base.z, base.w,
                              base.u, base.v, h});
    PrismCandidate c;
    c.base = base;
    c.base.x = base.x * s;
    c.base.y = base.y * s;
    c.base.z = base.z * s;
    c.base.w = base.w * s;
    c.base.u = base.u * s;
    c.base.v = base.v * s;
    c.h = h * s;
    return c;
}

}  // namespace prismforge
