#pragma once
// Combined semantic encoding and decoding: both sides deviate from the
// language at once, without coordination. The transmitter mixes over the
// frontier's deterministic encoders; the receiver applies its MAP decoder.

#include <string>
#include <vector>

#include "semcom/decoding.hpp"
#include "semcom/hull.hpp"
#include "semcom/region.hpp"
#include "semcom/types.hpp"

namespace semcom {

// All frontier encoders in report order: the lower chain then the upper.
std::vector<std::vector<int>> frontier_encoders(const RegionFrontier& f);

// Distortion of a deterministic encoder evaluated through the channel and
// an arbitrary decoder (instead of the language interpretation).
Rational redecoded_distortion(const std::vector<int>& encoder,
                              const DecodingScheme& v,
                              const SemanticLanguage& lang,
                              const SemanticChannel& channel,
                              const DistortionMeasure& distortion);

// Weighted mixture over the frontier encoders, decoded by the receiver-
// prior MAP decoder. Weights must be nonnegative and sum to exactly 1.
DistortionCostPoint csed_evaluate(const std::vector<Rational>& weights,
                                  const RegionFrontier& frontier,
                                  const SemanticLanguage& lang,
                                  const SemanticChannel& channel,
                                  const DistortionMeasure& distortion,
                                  const CostFunction& cost);

struct CsedRegion {
    // Re-decoded frontier points, lower chain first, with encoder labels.
    std::vector<DistortionCostPoint> generators;
    std::vector<Point2> lower;  // hull chains, collinear vertices dropped
    std::vector<Point2> upper;
    TieBreak tie_break;

    bool contains(const Rational& L, const Rational& D) const;
    Rational lower_envelope_at(const Rational& L) const;
};

CsedRegion csed_region(const SemanticLanguage& lang,
                       const SemanticChannel& channel,
                       const DistortionMeasure& distortion,
                       const CostFunction& cost,
                       const TieBreak& tie = TieBreak::lexicographic());

// Sufficient conditions under which combined operation is globally optimal:
// two hypotheses (error-free channel, symmetric distortion) and four
// conditions, all checked and reported rather than assumed.
struct Theorem4Report {
    bool error_free_channel = false;
    bool symmetric_distortion = false;
    bool matched_prior = false;          // p(w) == q(w)
    bool self_consistent = false;        // interpretation is the posterior
    bool phi_argmin_disjoint = false;    // best messages distinct per meaning
    bool psi_argmin_disjoint = false;    // used messages decode distinctly
    bool verdict = false;
    std::vector<std::string> notes;
};

Theorem4Report check_theorem4(const SemanticLanguage& lang,
                              const SemanticChannel& channel,
                              const DistortionMeasure& distortion,
                              const RegionFrontier& frontier);

// Side-by-side summary of the three strategies on one model.
struct StrategyComparison {
    RegionFrontier frontier;
    DecodingRegion decoding;
    Rational interpretation_distortion;  // language interpretation as decoder
    Rational map_rx_distortion;          // receiver-prior MAP decoder
    CsedRegion csed;
    // The lowest-distortion lower-chain encoder, re-decoded by the receiver.
    DistortionCostPoint encoding_floor;
    DistortionCostPoint csed_at_floor;
    bool csed_beats_both = false;
    bool csed_worse_than_both = false;
};

StrategyComparison compare_strategies(
    const SemanticLanguage& lang, const SemanticChannel& channel,
    const DistortionMeasure& distortion, const CostFunction& cost,
    const TieBreak& tie = TieBreak::lexicographic());

}  // namespace semcom
