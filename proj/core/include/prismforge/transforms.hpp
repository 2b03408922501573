#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prismforge/curves.hpp"
#include "prismforge/rat.hpp"

namespace prismforge {

/// Quartic q(t) = c4 t^4 + c3 t^3 + c2 t^2 + c1 t + c0 together with a known
/// rational point (t0, s0), s0^2 = q(t0).
struct QuarticCoeffs {
    Rat c4, c3, c2, c1, c0;
    Rat t0, s0;

    Rat eval(const Rat& t) const {
        return (((c4 * t + c3) * t + c2) * t + c1) * t + c0;
    }
};

enum class TransformId {
    SEC2,     // height-pair quartic <-> U(U + x^2)(U + y^2)
    TRAP,     // trapezium space-diagonal quartic <-> U^3 + i^2 U^2 - j^4 U
    PAR,      // parallelogram diagonal-pair quartic <-> the (m, n) curve
    PAR_E1,   // special parallelogram, first quartic 2t^4 - 6t^2 + 5
    PAR_E2,   // special parallelogram, second quartic 2t^4 + 2t^2 + 5
    KITE_X,   // kite x-condition quartic
    KITE_Y,   // kite y-condition quartic
    KITE_ZW,  // kite z/w-condition quartic
    RHOM_Z,   // rhombus z-condition (a^2 = V/U)
    RHOM_W,   // rhombus w-condition (a^2 = V/U)
};

const char* transform_name(TransformId id);
std::optional<TransformId> transform_from_name(const std::string& name);

/// One cataloged quartic <-> Weierstrass correspondence with its parameter
/// tuple. Parameter counts and coprimality constraints depend on the id.
struct NamedTransform {
    TransformId id;
    std::vector<Int> params;

    static NamedTransform make(TransformId id, std::vector<Int> params);
};

/// The Weierstrass curve instantiated from the transform's parameters.
Curve curve_of(const NamedTransform& t);

/// The quartic whose square values correspond to curve points, with its
/// known rational point.
QuarticCoeffs quartic_of(const NamedTransform& t);

/// Maps a curve point back to the quartic parameter. Absent at infinity and
/// at poles of the map.
std::optional<Rat> param_of_point(const NamedTransform& t, const CurvePoint& p);

/// True iff the transform's quartic evaluates to a rational square at param.
bool verify_square(const NamedTransform& t, const Rat& param);

}  // namespace prismforge
