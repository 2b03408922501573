#include "prismforge/transforms.hpp"

#include <stdexcept>

namespace prismforge {

namespace {

struct IdName {
    TransformId id;
    const char* name;
    std::size_t param_count;
    bool coprime;  // first two params must be coprime and positive
};

constexpr IdName kCatalog[] = {
    {TransformId::SEC2, "sec2", 2, false},
    {TransformId::TRAP, "trap", 2, true},
    {TransformId::PAR, "par", 2, false},
    {TransformId::PAR_E1, "par-e1", 0, false},
    {TransformId::PAR_E2, "par-e2", 0, false},
    {TransformId::KITE_X, "kite-x", 2, true},
    {TransformId::KITE_Y, "kite-y", 2, true},
    {TransformId::KITE_ZW, "kite-zw", 2, true},
    {TransformId::RHOM_Z, "rhom-z", 2, true},
    {TransformId::RHOM_W, "rhom-w", 2, true},
};

const IdName& entry(TransformId id) {
    for (const auto& e : kCatalog)
        if (e.id == id) return e;
    throw std::invalid_argument("unknown transform id");
}

}  // namespace

const char* transform_name(TransformId id) { return entry(id).name; }

std::optional<TransformId> transform_from_name(const std::string& name) {
    for (const auto& e : kCatalog)
        if (name == e.name) return e.id;
    return std::nullopt;
}

NamedTransform NamedTransform::make(TransformId id, std::vector<Int> params) {
    const auto& e = entry(id);
    if (params.size() != e.param_count)
        throw std::invalid_argument(std::string("transform ") + e.name +
                                    ": wrong parameter count");
    for (const Int& p : params)
        if (p == 0)
            throw std::invalid_argument(std::string("transform ") + e.name +
                                        ": zero parameter");
    if (e.coprime && gcd(params[0], params[1]) != 1)
        throw std::invalid_argument(std::string("transform ") + e.name +
                                    ": parameters must be coprime");
    return NamedTransform{id, std::move(params)};
}

Curve curve_of(const NamedTransform& t) {
    switch (t.id) {
        case TransformId::SEC2: {
            Rat x(t.params[0]), y(t.params[1]);
            return {x * x + y * y, x * x * y * y, Rat(0)};
        }
        case TransformId::TRAP: {
            Rat i(t.params[0]), j(t.params[1]);
            return {i * i, -(j * j * j * j), Rat(0)};
        }
        case TransformId::PAR: {
            Rat m(t.params[0]), n(t.params[1]);
            Rat d = m * m - n * n;
            return {2 * (m * m + n * n), d * d, Rat(0)};
        }
        case TransformId::PAR_E1:
            return {Rat(12), Rat(-4), Rat(0)};
        case TransformId::PAR_E2:
            return {Rat(-4), Rat(-36), Rat(0)};
        case TransformId::KITE_X: {
            Rat p(t.params[0]), q(t.params[1]);
            Rat pq2 = p * p * q * q, s = p * p + 4 * q * q;
            return {12 * pq2, -4 * pq2 * s * s, Rat(0)};
        }
        case TransformId::KITE_Y: {
            Rat p(t.params[0]), q(t.params[1]);
            Rat p2 = p * p, q2 = q * q;
            return {-2 * (p2 * p2 - 6 * p2 * q2 + q2 * q2),
                    (p2 + q2) * (p2 + q2) * (p2 + 4 * p * q + q2) *
                        (p2 - 4 * p * q + q2),
                    Rat(0)};
        }
        case TransformId::KITE_ZW: {
            Rat p(t.params[0]), q(t.params[1]);
            Rat p2 = p * p, q2 = q * q;
            return {p2 * p2 + 18 * p2 * q2 + q2 * q2,
                    12 * p2 * q2 * (p2 * p2 - 4 * q2 * q2), Rat(0)};
        }
        case TransformId::RHOM_Z: {
            Rat b(t.params[0]), c(t.params[1]);
            Rat b2 = b * b, c2 = c * c;
            Rat k = 7 * b2 * b2 - 18 * b2 * c2 + 7 * c2 * c2;
            Rat d = b2 - c2;
            return {-k, 4 * d * d * (b2 - 3 * c2) * (3 * b2 - c2), Rat(0)};
        }
        case TransformId::RHOM_W: {
            Rat b(t.params[0]), c(t.params[1]);
            Rat b2 = b * b, c2 = c * c;
            Rat k = b2 * b2 - 30 * b2 * c2 + c2 * c2;
            return {k, -16 * b2 * c2 * (b2 * b2 - 14 * b2 * c2 + c2 * c2),
                    Rat(0)};
        }
    }
    throw std::logic_error("curve_of: unreachable");
}

QuarticCoeffs quartic_of(const NamedTransform& t) {
    QuarticCoeffs q;
    switch (t.id) {
        case TransformId::SEC2: {
            Rat x(t.params[0]), y(t.params[1]);
            q = {y * y, Rat(0), 4 * x * x - 2 * y * y, Rat(0), y * y,
                 Rat(0), Rat(0)};
            q.t0 = Rat(0);
            break;
        }
        case TransformId::TRAP: {
            Rat c(t.params[0], t.params[1]);
            q = {Rat(1), 4 * c, 4 * c * c + 6, 4 * c, Rat(1), Rat(0), Rat(0)};
            q.t0 = Rat(0);
            break;
        }
        case TransformId::PAR: {
            Rat k(t.params[0], t.params[1]);
            q = {Rat(1), 4 * k, 2 * (1 - 2 * k * k), -12 * k, 8 * k * k + 1,
                 Rat(0), Rat(0)};
            q.t0 = Rat(1);
            break;
        }
        case TransformId::PAR_E1:
            q = {Rat(2), Rat(0), Rat(-6), Rat(0), Rat(5), Rat(1), Rat(0)};
            break;
        case TransformId::PAR_E2:
            q = {Rat(2), Rat(0), Rat(2), Rat(0), Rat(5), Rat(1), Rat(0)};
            break;
        case TransformId::KITE_X: {
            Rat g(t.params[0], t.params[1]);
            Rat g2 = g * g;
            q = {g2 + 16, Rat(0), -6 * g2, Rat(0), g2 * (g2 + 1),
                 g / 2, Rat(0)};
            break;
        }
        case TransformId::KITE_Y: {
            Rat g(t.params[0], t.params[1]);
            Rat g2 = g * g;
            q = {Rat(16), Rat(0), g2 * g2 - 6 * g2 + 1, Rat(0), g2 * g2,
                 g / 2, Rat(0)};
            break;
        }
        case TransformId::KITE_ZW: {
            Rat g(t.params[0], t.params[1]);
            Rat g2 = g * g;
            q = {g2 + 16, 2 * g * (g2 - 1), g2 * g2 - 12 * g2 + 1,
                 -2 * g * (g2 - 1), g2 * (g2 + 1), g / 2, Rat(0)};
            break;
        }
        case TransformId::RHOM_Z: {
            Rat b(t.params[0]), c(t.params[1]);
            Rat b2 = b * b, c2 = c * c;
            Rat k = 7 * b2 * b2 - 18 * b2 * c2 + 7 * c2 * c2;
            Rat s = b2 + c2;
            q = {Rat(4), Rat(0), 8 * k, Rat(0), 4 * s * s * s * s, s, Rat(0)};
            break;
        }
        case TransformId::RHOM_W: {
            Rat b(t.params[0]), c(t.params[1]);
            Rat b2 = b * b, c2 = c * c;
            Rat k = b2 * b2 - 30 * b2 * c2 + c2 * c2;
            Rat s = b2 + c2;
            q = {Rat(4), Rat(0), -8 * k, Rat(0), 4 * s * s * s * s, s, Rat(0)};
            break;
        }
    }
    auto s0 = rat_sqrt(q.eval(q.t0));
    if (!s0)
        throw std::logic_error("quartic_of: known point is not on the quartic");
    q.s0 = *s0;
    return q;
}

std::optional<Rat> param_of_point(const NamedTransform& t,
                                  const CurvePoint& p) {
    if (!on_curve(curve_of(t), p))
        throw std::invalid_argument("param_of_point: point not on curve");
    if (p.is_infinity()) return std::nullopt;
    const Rat &U = p.U(), &V = p.V();
    auto ratio = [](const Rat& num, const Rat& den) -> std::optional<Rat> {
        if (den.is_zero()) return std::nullopt;
        return num / den;
    };
    switch (t.id) {
        case TransformId::SEC2: {
            Rat x(t.params[0]), y(t.params[1]);
            return ratio(V, y * (U + x * x));
        }
        case TransformId::TRAP: {
            Rat i(t.params[0]), j(t.params[1]);
            return ratio(V - i * U, j * (U + j * j));
        }
        case TransformId::PAR: {
            // Derived inverse of the quartic <-> curve correspondence; the
            // printed map fails the round-trip on general points.
            Rat m(t.params[0]), n(t.params[1]);
            Rat cst = (m - n) * (m - n) * (m + n);
            return ratio((3 * m - n) * U - V - cst, (m + n) * U - V + cst);
        }
        case TransformId::PAR_E1:
            return ratio(4 * U + V + 4, 2 * U + V - 4);
        case TransformId::PAR_E2:
            return ratio(4 * U + V + 12, V - 2 * U - 12);
        case TransformId::KITE_X: {
            Rat p_(t.params[0]), q_(t.params[1]);
            Rat w = 8 * p_ * p_ * q_ * q_ * (p_ * p_ + 4 * q_ * q_);
            return ratio(p_ * (V + 4 * q_ * q_ * U + w),
                         2 * q_ * (V - p_ * p_ * U - w));
        }
        case TransformId::KITE_Y: {
            Rat q_(t.params[1]);
            return ratio(V, 8 * q_ * q_ * U);
        }
        case TransformId::KITE_ZW: {
            Rat p_(t.params[0]), q_(t.params[1]);
            Rat p2 = p_ * p_, q2 = q_ * q_;
            Rat w = 24 * p2 * q2 * (p2 - 2 * q2);
            return ratio(p_ * (V + (p2 - 5 * q2) * U + w),
                         2 * q_ * (V + (q2 - 2 * p2) * U - w));
        }
        case TransformId::RHOM_Z:
        case TransformId::RHOM_W:
            return ratio(V, U);
    }
    throw std::logic_error("param_of_point: unreachable");
}

bool verify_square(const NamedTransform& t, const Rat& param) {
    return is_square(quartic_of(t).eval(param));
}

}  // namespace prismforge
