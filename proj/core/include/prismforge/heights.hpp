#pragma once

#include <set>
#include <vector>

#include "prismforge/curves.hpp"
#include "prismforge/rat.hpp"

namespace prismforge {

/// Bounds for the bounded-point-search height engine. "No heights found"
/// under these bounds is a search result, not a proof of nonexistence.
struct HeightBounds {
    Int numerator_bound = 10000;
    Int denominator_bound = 4;
    int coefficient_bound = 1;  // L in the generator-combination sweep
};

/// The curve V^2 = U^3 + (x^2 + y^2) U^2 + x^2 y^2 U whose non-torsion
/// points produce heights h with x^2 + h^2 and y^2 + h^2 both square.
Curve height_curve(const Int& x, const Int& y);

/// The two positive heights obtained from a single non-torsion point by
/// sweeping it against the full torsion set. Their product is x*y.
/// Throws if p is torsion (no nontrivial parameter arises).
std::set<Rat> heights_from_point(const Int& x, const Int& y,
                                 const CurvePoint& p);

/// All heights reachable from generator combinations within bounds, sorted
/// ascending and post-verified against both square conditions. Empty when
/// the bounded scan finds no non-torsion point.
std::vector<Rat> compatible_heights(const Int& x, const Int& y,
                                    const HeightBounds& bounds = {});

/// Keeps the heights h with t^2 + h^2 square for every t in lengths.
std::vector<Rat> filter_heights(const std::vector<Rat>& hs,
                                const std::vector<Int>& lengths);

}  // namespace prismforge
