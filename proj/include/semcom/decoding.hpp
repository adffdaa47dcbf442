#pragma once
// Semantic decoding: risk tables, the (vertical) decoding region, MAP-style
// decoders under either prior, the Hamming optimality condition with its
// simplex view, and the two interpretation refinements.

#include <optional>
#include <vector>

#include "semcom/types.hpp"

namespace semcom {

enum class PriorChoice { transmitter, receiver };

// Likelihood of receiving shat given meaning w, with the channel folded in:
// p(shat|w) = sum_s p(s|w) c(shat|s). N x M, row w.
Mat effective_likelihood(const SemanticLanguage& lang,
                         const SemanticChannel& channel);

// Risk of decoding received message shat as meaning what, weighted by the
// chosen prior: sum over (w, s) of prior(w) p(s|w) c(shat|s) d(w, what).
// M x N, row shat.
Mat decoding_risk_table(const SemanticLanguage& lang,
                        const SemanticChannel& channel,
                        const DistortionMeasure& distortion,
                        PriorChoice prior);

// Average distortion of a decoding scheme against the language expression.
Rational decoder_distortion(const DecodingScheme& v,
                            const SemanticLanguage& lang,
                            const SemanticChannel& channel,
                            const DistortionMeasure& distortion);

// Fixed transmission cost of the language expression.
Rational expression_cost(const SemanticLanguage& lang,
                         const CostFunction& cost);

// Best decoder perceived under the chosen prior: per message, the meaning
// of least risk, ties to the lowest meaning index.
DecodingScheme map_decoder(const SemanticLanguage& lang,
                           const SemanticChannel& channel,
                           const DistortionMeasure& distortion,
                           PriorChoice prior);

// The achievable region of decoding is the vertical segment at the fixed
// expression cost between the best and worst deterministic decoders under
// the transmitter prior.
struct DecodingRegion {
    Rational cost;
    Rational d_min;
    Rational d_max;
    DecodingScheme best;
    DecodingScheme worst;
};

DecodingRegion decoding_region(const SemanticLanguage& lang,
                               const SemanticChannel& channel,
                               const DistortionMeasure& distortion,
                               const CostFunction& cost);

// Per-message check that the receiver-prior MAP set is contained in the
// transmitter-prior MAP set; exactly then does decoding under the wrong
// prior still attain the optimal Hamming distortion.
struct HammingOptimalityReport {
    struct Entry {
        int message;
        std::vector<int> rx_argmax;
        std::vector<int> tx_argmax;
        bool contained;
    };
    bool ok = true;
    std::vector<Entry> entries;
};

// Throws std::domain_error unless the distortion is Hamming.
HammingOptimalityReport hamming_optimality_check(
    const SemanticLanguage& lang, const SemanticChannel& channel,
    const DistortionMeasure& distortion);

// Normalized posterior point of a received message in the meaning simplex,
// together with the index of the decision region it falls into.
struct SimplexPoint {
    std::vector<Rational> alpha;
    int region;
};

// Throws std::domain_error when the message is unreachable under the prior.
SimplexPoint simplex_embed(int shat, const SemanticLanguage& lang,
                           const SemanticChannel& channel,
                           const DistortionMeasure& distortion,
                           PriorChoice prior);

// Column-wise improvement of the interpretation: collapse a message to a
// strictly best meaning when one exists, else remove a strictly worst
// meaning and renormalize, else leave the column alone. Never increases the
// average distortion.
DecodingScheme refine_interpretation(const SemanticLanguage& lang,
                                     const SemanticChannel& channel,
                                     const DistortionMeasure& distortion);

// Distortion of the language interpretation used as a decoder, minus the
// distortion of the receiver-prior MAP decoder (Hamming only). Positive
// when decoding beats the plain interpretation; can be negative under a
// misleading receiver prior.
Rational decoding_gap(const SemanticLanguage& lang,
                      const SemanticChannel& channel,
                      const DistortionMeasure& distortion);

}  // namespace semcom
