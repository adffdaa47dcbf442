#pragma once
// Basic functionals over a model: per-pair expected distortion, scheme
// averages, logical self-consistency and the entropy helper.

#include <optional>
#include <utility>
#include <vector>

#include "semcom/types.hpp"

namespace semcom {

// Expected end-to-end distortion of expressing meaning w as message s
// through the channel and the fixed interpretation:
//   sum over (shat, what) of c(shat|s) q(what|shat) d(w, what).
Rational expected_distortion(int w, int s, const SemanticLanguage& lang,
                             const SemanticChannel& channel,
                             const DistortionMeasure& distortion);

// N x M table of expected_distortion values.
Mat expected_distortion_table(const SemanticLanguage& lang,
                              const SemanticChannel& channel,
                              const DistortionMeasure& distortion);

// Average distortion of an encoding scheme against the language
// interpretation, computed as the prior- and scheme-weighted sum of the
// per-pair table.
Rational average_distortion_enc(const EncodingScheme& u,
                                const SemanticLanguage& lang,
                                const SemanticChannel& channel,
                                const DistortionMeasure& distortion);

// Average message cost of an encoding scheme.
Rational average_cost(const EncodingScheme& u, const SemanticLanguage& lang,
                      const CostFunction& cost);

// Marginal message distribution p(s) = sum_w prior(w) p(s|w).
std::vector<Rational> message_marginal(const SemanticLanguage& lang,
                                       const std::vector<Rational>& prior);

// Bayes-posterior interpretation built from the expression and a prior via
// q(w|s) = p(s|w) prior(w) / p(s). Columns for messages with p(s) = 0 are
// uniform (they never occur and carry no distortion).
Mat posterior_interpretation(const SemanticLanguage& lang,
                             const std::vector<Rational>& prior);

struct SelfConsistencyReport {
    bool consistent = true;
    // First (meaning, message) pair violating the posterior identity.
    std::optional<std::pair<int, int>> counterexample;
    // Messages with p(s) = 0, skipped by the check.
    std::vector<int> vacuous_messages;
};

// A language is logically self-consistent when its interpretation equals
// the Bayes posterior of its expression under the transmitter prior.
SelfConsistencyReport is_self_consistent(const SemanticLanguage& lang);

// Entropy of a statement given a prior over worlds and the set of worlds
// satisfying it: -log2 of the satisfying prior mass. The one operation that
// leaves exact arithmetic. Throws std::domain_error when no satisfying
// world has positive mass.
double semantic_entropy(const std::vector<Rational>& world_prior,
                        const std::vector<bool>& satisfies);

}  // namespace semcom
