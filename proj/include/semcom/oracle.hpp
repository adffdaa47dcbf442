#pragma once
// Brute-force and statistical validation: exhaustive enumeration of
// deterministic schemes with exact hulls, jointly optimized envelopes, and
// a seeded one-shot transmission simulator whose sampling is itself exact.

#include <cstdint>
#include <optional>
#include <vector>

#include "semcom/hull.hpp"
#include "semcom/types.hpp"

namespace semcom {

struct EnumerationBudget {
    std::uint64_t max_encoders = 1'000'000;
    std::uint64_t max_decoders = 1'000'000;
};

struct EnumeratedEncoder {
    std::vector<int> encoder;
    Rational cost;
    Rational distortion;
};

// All M^N deterministic encoders with their exact (cost, distortion).
// Throws std::invalid_argument when M^N exceeds the budget, naming the
// required count.
std::vector<EnumeratedEncoder> enumerate_encoding_points(
    const SemanticLanguage& lang, const SemanticChannel& channel,
    const DistortionMeasure& distortion, const CostFunction& cost,
    const EnumerationBudget& budget = {});

struct EnumeratedDecoder {
    std::vector<int> decoder;
    Rational distortion;
};

// All N^M deterministic decoders with their exact distortion at the fixed
// expression cost.
std::vector<EnumeratedDecoder> enumerate_decoders(
    const SemanticLanguage& lang, const SemanticChannel& channel,
    const DistortionMeasure& distortion,
    const EnumerationBudget& budget = {});

// For every deterministic encoder, the distortion of the jointly optimal
// decoder (computed directly, not enumerated), reduced to the exact lower
// envelope over cost.
struct GlobalOptimum {
    std::vector<Point2> points;    // one per encoder (cost, best distortion)
    std::vector<Point2> envelope;  // lower hull of the points
};

GlobalOptimum global_optimum(const SemanticLanguage& lang,
                             const SemanticChannel& channel,
                             const DistortionMeasure& distortion,
                             const CostFunction& cost,
                             const EnumerationBudget& budget = {});

// One-shot transmission experiment: meaning -> message -> channel ->
// reconstruction, repeated independently. Sampling converts each
// distribution row to a common denominator and draws integers, so the
// sampler introduces no floating-point bias. Trials run in fixed-size
// blocks with per-block derived seeds; identical configurations give
// identical results.
struct SimulationConfig {
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    // Replacements for the language expression / interpretation. Absent
    // means the language's own mapping is used.
    std::optional<EncodingScheme> encoder;
    std::optional<DecodingScheme> decoder;
};

struct SimulationResult {
    std::uint64_t trials = 0;
    Rational mean_cost;
    Rational mean_distortion;
    double se_cost = 0.0;
    double se_distortion = 0.0;
    // Empirical frequency of each received message (usable as a prior
    // estimate when transmissions repeat).
    std::vector<std::uint64_t> received_counts;
};

SimulationResult simulate(const SimulationConfig& config,
                          const SemanticLanguage& lang,
                          const SemanticChannel& channel,
                          const DistortionMeasure& distortion,
                          const CostFunction& cost);

}  // namespace semcom
