#pragma once
// Distortion-cost region of semantic encoding: per-meaning dominant message
// subsets, the greedy slope-driven boundary walk, critical points, exact
// envelope queries and time-sharing decomposition.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semcom/hull.hpp"
#include "semcom/types.hpp"

namespace semcom {

// The six per-meaning message subsets that suffice to trace the region
// boundary. Each list holds message indices in increasing (index, cost)
// order. lower_* sets are Pareto-dominant toward small distortion, upper_*
// toward large distortion; *_left prefers cheap messages, *_right costly
// ones. lower = lower_left U lower_right, upper likewise.
struct MessageSubsets {
    std::vector<int> lower_left;
    std::vector<int> lower_right;
    std::vector<int> lower;
    std::vector<int> upper_left;
    std::vector<int> upper_right;
    std::vector<int> upper;
};

MessageSubsets message_subsets(int w, const SemanticLanguage& lang,
                               const SemanticChannel& channel,
                               const DistortionMeasure& distortion,
                               const CostFunction& cost);

// Secant slope of expected distortion versus cost between two messages for
// one meaning. Throws std::domain_error when the costs are equal.
Rational tradeoff_slope(int w, int s_a, int s_b, const SemanticLanguage& lang,
                        const SemanticChannel& channel,
                        const DistortionMeasure& distortion,
                        const CostFunction& cost);

// Tie policy for equally steep boundary steps. Lexicographic (smallest
// meaning, then smallest message) is the default and fully reproducible;
// seeded draws uniformly among the tied candidates.
struct TieBreak {
    enum class Kind { lexicographic, seeded };
    Kind kind = Kind::lexicographic;
    std::uint64_t seed = 0;

    static TieBreak lexicographic() { return {}; }
    static TieBreak seeded(std::uint64_t s) { return {Kind::seeded, s}; }
    std::string describe() const;
};

struct FrontierPoint {
    std::vector<int> encoder;  // per-meaning message index
    Rational cost;
    Rational distortion;
    // Slope selected by the greedy step that produced this point (absent on
    // the chain head).
    std::optional<Rational> step_slope;
};

struct RegionFrontier {
    std::vector<FrontierPoint> lower;
    std::vector<FrontierPoint> upper;
    TieBreak tie_break;

    std::vector<Point2> lower_points() const;
    std::vector<Point2> upper_points() const;
};

RegionFrontier build_frontier(const SemanticLanguage& lang,
                              const SemanticChannel& channel,
                              const DistortionMeasure& distortion,
                              const CostFunction& cost,
                              const TieBreak& tie = TieBreak::lexicographic());

// Envelope of a chain as a piecewise-linear function of cost (consecutive
// duplicate points dropped, collinear vertices kept).
PiecewiseLinear chain_envelope(const std::vector<FrontierPoint>& chain);

// Chain vertices with duplicates and collinear interior vertices removed;
// the canonical geometric form used for oracle comparison.
std::vector<Point2> chain_vertices(const std::vector<FrontierPoint>& chain);

// The eight extreme points of the region: for each of the lower and upper
// boundaries, the cheapest point, the first and last points attaining the
// boundary's extreme distortion, and the costliest point.
struct CriticalPoints {
    std::array<DistortionCostPoint, 4> lower;
    std::array<DistortionCostPoint, 4> upper;
};

CriticalPoints critical_points(const RegionFrontier& frontier,
                               const SemanticLanguage& lang);

// Minimum achievable distortion at average cost L (exact interpolation on
// the lower boundary). Throws std::domain_error outside the achievable
// cost range.
Rational distortion_cost_function(const RegionFrontier& frontier,
                                  const Rational& L);

bool region_contains(const RegionFrontier& frontier, const Rational& L,
                     const Rational& D);

// Product-form time-sharing decomposition of a row-stochastic encoder into
// deterministic encoders: weight of (i_1..i_N) is the product of the row
// entries. Weights are nonnegative and sum to exactly 1, and the weighted
// (cost, distortion) averages reproduce the encoder's own values.
struct TimeShareTerm {
    Rational weight;
    std::vector<int> encoder;
};

std::vector<TimeShareTerm> time_share_decompose(
    const EncodingScheme& u, std::uint64_t max_terms = 1'000'000);

// "{UU, RR}"-style rendering of a deterministic encoder.
std::string encoder_label(const std::vector<int>& encoder,
                          const SemanticLanguage& lang);

}  // namespace semcom
