#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prismforge/arith.hpp"
#include "prismforge/rat.hpp"

namespace prismforge {

enum class ShapeKind { GENERAL, TRAPEZIUM, CYCLIC, PARALLELOGRAM, KITE, RHOMBUS };
enum class GeometryStatus { CONVEX, DEGENERATE, INVALID };

const char* shape_name(ShapeKind k);
std::optional<ShapeKind> shape_from_name(const std::string& name);
const char* geometry_status_name(GeometryStatus s);

/// Base quadrilateral of a right prism. Sides x = AB, y = BC, z = CD,
/// w = DA; diagonals u = AC, v = BD. Shapes with coincident lengths mirror
/// them into the unused slots (trapezium w = z, u = v; rhombus y = x).
struct PrismBase {
    ShapeKind kind = ShapeKind::GENERAL;
    Rat x, y, z, w, u, v;
    std::vector<Rat> params;  // generating parameter tuple, for provenance
    GeometryStatus geometry_status = GeometryStatus::CONVEX;
    std::optional<Rat> cos_alpha;
    std::optional<Rat> cos_beta;

    /// Names and values of the shape's distinct square conditions, in the
    /// documented order.
    std::vector<std::pair<std::string, Rat>> condition_lengths() const;
};

struct PrismCandidate {
    PrismBase base;
    Rat h;
};

struct DiagonalCondition {
    std::string length_name;
    Rat value;
    bool square;  // is_square(value^2 + h^2)
};

struct DiagonalReport {
    std::vector<DiagonalCondition> conditions;
    int square_count = 0;
    int required_count = 0;
    bool perfect = false;
    bool integral = false;
};

/// Evaluates every distinct required condition of the candidate's shape.
DiagonalReport classify(const PrismCandidate& c);

/// General quadrilateral from (x, w, cos alpha, y, z) via the law-of-cosines
/// chain. Absent when a diagonal fails its rationality test.
std::optional<PrismBase> general_quad_assemble(const Int& x, const Int& w,
                                               const Rat& cos_alpha,
                                               const Int& y, const Int& z);

/// Isosceles trapezium with parallel sides x > y and legs z. Absent when
/// z^2 + xy is not a perfect square.
std::optional<PrismBase> trapezium_base(const Int& x, const Int& y,
                                        const Int& z);

/// Rational trapezium from the (c, d) parameterization; the identity
/// v^2 = z^2 + xy holds by construction. Requires 0 < c, d < 1.
PrismBase trapezium_param(const Rat& c, const Rat& d);

struct TrapChainResult {
    Rat d;
    bool x_cond;  // i^8 + 3 i^4 j^4 - 2 i^2 j^6 + 2 j^8 square
    bool y_cond;  // i^4 + 2 i^2 j^2 + 5 j^4 square
};

/// The special-point chain on the trapezium curve: d from the doubled
/// point, plus the two square conditions for h = 2d.
TrapChainResult trap_special_chain(const Int& i, const Int& j);

/// Cyclic quadrilateral from half-angle parameters (f, g, t), scaled to the
/// primitive integer 6-tuple. Non-positive lengths mark the base invalid.
PrismBase cyclic_base(const Rat& f, const Rat& g, const Rat& t);

/// Parallelogram with sides x, y; present iff both diagonal quadrics are
/// rational squares.
std::optional<PrismBase> parallelogram_base(const Int& x, const Int& y,
                                            const Rat& cos_alpha);

/// The special parallelogram x = 2pq, y = p^2 - 2q^2, z = p^2 + 2q^2,
/// w = y (so z^2 = 2x^2 + y^2). Requires p^2 > 2q^2.
PrismBase special_parallelogram_base(const Int& p, const Int& q);

/// Kite from half-angle parameters f, g > 1, primitively scaled.
PrismBase kite_base(const Rat& f, const Rat& g);

/// g = k + sqrt(k^2 - 1) when k^2 - 1 is a rational square. Requires k >= 1.
std::optional<Rat> kite_g_from_k(const Rat& k);

/// Rhombus x = m^2 + n^2, z = 2(m^2 - n^2), w = 4mn for coprime m > n >= 1.
PrismBase rhombus_base(const Int& m, const Int& n);

/// Scales lengths and height by the least positive rational making
/// everything integral, then divides out the common gcd. Classification is
/// invariant under this scaling.
PrismCandidate primitive_scale(const PrismBase& base, const Rat& h);

}  // namespace prismforge
