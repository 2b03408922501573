#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "prismforge/rat.hpp"

namespace prismforge {

struct IsqrtResult {
    Int root;    // floor(sqrt(n))
    bool exact;  // root * root == n
};

/// Floor integer square root with exactness flag. Throws on negative input.
IsqrtResult isqrt(const Int& n);

/// True iff q is the square of a rational, i.e. both reduced numerator and
/// denominator are perfect squares. Negatives are never squares.
bool is_square(const Rat& q);

/// Exact rational square root, when one exists.
std::optional<Rat> rat_sqrt(const Rat& q);

/// P(r) = (r^2 - 1) / (2r), the leg ratio of the rational right triangle
/// parameterized by r. Throws on r = 0.
Rat pyth_ratio(const Rat& r);

/// The root r = d + sqrt(1 + d^2) of P(r) = d, present iff 1 + d^2 is a
/// rational square.
std::optional<Rat> pyth_ratio_inverse(const Rat& d);

/// A rational point on the unit circle: cos^2 + sin^2 = 1 exactly.
struct CosSin {
    Rat cos;
    Rat sin;
};

/// Half-angle parameterization: ((f^2-1)/(f^2+1), 2f/(f^2+1)).
CosSin half_angle(const Rat& f);

/// Deterministic enumeration of reduced rationals p/q with
/// max(|p|, q) <= height_max, restricted to the open interval
/// (lower, upper). Order: ascending height, then ascending value.
/// Re-creatable from a cursor index, so sweeps can be partitioned
/// and resumed.
class RationalEnumerator {
public:
    RationalEnumerator(const Int& height_max, const Rat& lower,
                       std::optional<Rat> upper = std::nullopt);

    /// Total number of values emitted.
    std::uint64_t size() const { return values_.size(); }

    /// Value at cursor position i (0-based).
    const Rat& at(std::uint64_t i) const { return values_.at(i); }

    const std::vector<Rat>& values() const { return values_; }

private:
    std::vector<Rat> values_;
};

/// Convenience wrapper returning the full sequence.
std::vector<Rat> enumerate_rationals(const Int& height_max, const Rat& lower,
                                     std::optional<Rat> upper = std::nullopt);

}  // namespace prismforge
