#pragma once

#include <string>
#include <utility>
#include <vector>

#include "prismforge/arith.hpp"
#include "prismforge/rat.hpp"

namespace prismforge {

/// Weierstrass model V^2 = U^3 + a2*U^2 + a4*U + a6 over Q.
struct Curve {
    Rat a2;
    Rat a4;
    Rat a6;

    /// Discriminant of the cubic; zero means singular.
    Rat cubic_discriminant() const;
    bool singular() const { return cubic_discriminant().is_zero(); }

    /// Right-hand side U^3 + a2 U^2 + a4 U + a6.
    Rat rhs(const Rat& U) const;

    friend bool operator==(const Curve&, const Curve&) = default;
};

class CurvePoint {
public:
    static CurvePoint infinity() { return CurvePoint(); }
    static CurvePoint affine(Rat U, Rat V) {
        CurvePoint p;
        p.inf_ = false;
        p.U_ = std::move(U);
        p.V_ = std::move(V);
        return p;
    }

    bool is_infinity() const { return inf_; }
    const Rat& U() const { return U_; }
    const Rat& V() const { return V_; }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.U_ == b.U_ && a.V_ == b.V_;
    }

    std::string str() const;

private:
    CurvePoint() = default;
    bool inf_ = true;
    Rat U_, V_;
};

bool on_curve(const Curve& c, const CurvePoint& p);

CurvePoint negate(const CurvePoint& p);

/// Chord-tangent group law. Inputs must lie on c.
CurvePoint add(const Curve& c, const CurvePoint& p, const CurvePoint& q);

/// n*P by double-and-add; negative n negates.
CurvePoint mul(const Curve& c, long n, const CurvePoint& p);

struct TorsionInfo {
    /// Certified finite-order points (including infinity, order 1),
    /// each with its exact order.
    std::vector<std::pair<CurvePoint, int>> points;
    /// "trivial", "Z2", "Z2xZ2", "Z4", "Z2xZ4", ... within Mazur's list.
    std::string structure_label;

    bool contains(const CurvePoint& p) const;
};

/// Rational torsion from exact 2-torsion (cubic roots), plus 3-torsion and
/// successive halvings, closed under the group law. Every listed point is
/// certified by repeated addition; orders are capped at 12.
TorsionInfo torsion(const Curve& c);

/// Bounded point scan: all affine points with U = m/e^2,
/// |m| <= numerator_bound * e^2, 1 <= e <= denominator_bound, whose cubic
/// value is a rational square. Emits the V >= 0 representative.
std::vector<CurvePoint> find_points(const Curve& c, const Int& numerator_bound,
                                    const Int& denominator_bound);

struct GeneratorSet {
    std::vector<CurvePoint> generators;  // infinite order, pairwise unrelated
    int coefficient_bound = 1;           // L
};

/// n1*G1 + ... + ns*Gs + T. Each |ni| must be <= coefficient_bound and
/// T must come from the curve's torsion set.
CurvePoint combine(const Curve& c, const GeneratorSet& gens,
                   const std::vector<long>& coeffs, const CurvePoint& torsion_pt);

}  // namespace prismforge
