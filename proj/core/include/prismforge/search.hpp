#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "prismforge/curves.hpp"
#include "prismforge/heights.hpp"
#include "prismforge/shapes.hpp"

namespace prismforge {

/// Bounds shared by every sweep. A sweep's output is exact but bounded:
/// absence of records is a search result, not a proof.
struct SearchBounds {
    Int param_height_max = 10;
    Int point_numerator_bound = 10000;
    Int point_denominator_bound = 4;
    int coefficient_bound = 1;   // L in the generator-combination sweep
    int min_square_count = 0;    // 0 = the shape's full required count
    Int scale_cap = 1000;        // largest denominator-clearing multiplier
    Int length_cap = 0;          // 0 = no cap on primitive lengths
    int point_multiple_max = 8;  // n*P walk depth on transform curves
    bool require_distinct = false;
};

struct SearchRecord {
    PrismCandidate candidate;
    DiagonalReport report;
    std::string strategy;
    std::vector<Rat> params;
    Int measure;  // sum of reported lengths + h, after primitive scaling
};

struct Checkpoint {
    std::string strategy;
    SearchBounds bounds;
    std::uint64_t cursor = 0;
    std::uint64_t emitted_count = 0;
};

struct CursorRange {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
};

using RecordSink = std::function<void(const SearchRecord&)>;

/// A deterministic enumeration over a fixed cursor grid. run(lo, hi, sink)
/// processes exactly the cells in [lo, hi); disjoint ranges can run
/// concurrently and their union reproduces the full sweep.
struct Sweep {
    std::string strategy;
    std::uint64_t size = 0;
    std::function<void(std::uint64_t, std::uint64_t, const RecordSink&)> run;
};

enum class KiteStrategy { X_FIRST, Y_FIRST, ZW_FIRST, DIRECT };
enum class RhombusStrategy { Z_CURVE, W_CURVE, DIRECT };

const char* kite_strategy_name(KiteStrategy s);
const char* rhombus_strategy_name(RhombusStrategy s);
std::optional<KiteStrategy> kite_strategy_from_name(const std::string& name);
std::optional<RhombusStrategy> rhombus_strategy_from_name(
    const std::string& name);

Sweep trapezium_sweep(const SearchBounds& bounds);
Sweep general_sweep(const SearchBounds& bounds);
Sweep cyclic_sweep(const SearchBounds& bounds);
Sweep parallelogram_sweep(const SearchBounds& bounds);
Sweep special_parallelogram_sweep(const SearchBounds& bounds);
Sweep kite_sweep(const SearchBounds& bounds, KiteStrategy strategy);
Sweep rhombus_sweep(const SearchBounds& bounds, RhombusStrategy strategy);

/// Raw records from one cursor range, in emission order.
std::vector<SearchRecord> collect(const Sweep& sweep, const CursorRange& range);

/// Canonical output order: ascending measure, ties by lexicographic
/// lengths; duplicate candidates collapsed.
std::vector<SearchRecord> finalize_records(std::vector<SearchRecord> records);

/// Full sweep, optionally split across worker threads; always returns the
/// finalized (deterministic) sequence.
std::vector<SearchRecord> run_full(const Sweep& sweep, unsigned workers = 1);

std::vector<SearchRecord> search_trapezium(const SearchBounds& bounds);
std::vector<SearchRecord> search_general(const SearchBounds& bounds);
std::vector<SearchRecord> search_cyclic(const SearchBounds& bounds);
std::vector<SearchRecord> search_parallelogram(const SearchBounds& bounds);
std::vector<SearchRecord> search_special_parallelogram(
    const SearchBounds& bounds);
std::vector<SearchRecord> search_kite(const SearchBounds& bounds,
                                      KiteStrategy strategy);
std::vector<SearchRecord> search_rhombus(const SearchBounds& bounds,
                                         RhombusStrategy strategy);

struct SpecialParScanRow {
    int n;
    CurvePoint point;
    Rat p_over_q;
    bool cond2_square;
};

/// Walks n*G on the first (or second) special-parallelogram curve, maps each
/// point to p/q and tests whether the companion quartic is square.
std::vector<SpecialParScanRow> special_par_condition_scan(int n_max,
                                                          int which_curve = 1);

/// Splits [0, total) into `parts` contiguous ranges (some possibly empty).
std::vector<CursorRange> partition(std::uint64_t total, std::uint64_t parts);

}  // namespace prismforge
