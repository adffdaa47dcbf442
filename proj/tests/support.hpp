#pragma once
// Shared fixtures and random-instance generators for the test suites.

#include <random>
#include <string>
#include <vector>

#include "semcom/core.hpp"
#include "semcom/io.hpp"
#include "semcom/types.hpp"

namespace semcom::test {

inline Rational rat(const std::string& s) { return Rational::parse(s); }

// The worked 3x3 grid example, entered literally (message order, costs,
// interpretation, expression, priors). Deliberately independent of the
// generator so the two construction routes can be compared.
inline Model grid_world_fixture() {
    Model model;
    auto& lang = model.language;
    lang.meanings = {"A", "B"};
    lang.messages = {"∅",  "U",   "R",   "UU",  "UR",  "RU",  "RR",
                     "UUR", "URU", "RUU", "URR", "RUR", "RRU", "UURR"};
    const char* costs[] = {"0", "1", "2", "2", "3", "3", "4",
                           "4", "4", "4", "5", "5", "5", "6"};
    const char* q_a[] = {"1/3", "2/5", "1/4", "1/2", "1/3", "1/3", "0",
                         "1/2", "1/2", "1/2", "0",   "0",   "0",   "0"};
    const int m = 14;
    for (int s = 0; s < m; ++s) model.cost.costs.push_back(rat(costs[s]));
    lang.interpretation = Mat(m, 2);
    for (int s = 0; s < m; ++s) {
        lang.interpretation.at(s, 0) = rat(q_a[s]);
        lang.interpretation.at(s, 1) = Rational(1) - rat(q_a[s]);
    }
    lang.expression = Mat(2, m);
    for (int s = 0; s < m; ++s) {
        bool a_support = !rat(q_a[s]).is_zero();
        lang.expression.at(0, s) = a_support ? Rational(1, 9) : Rational(0);
        lang.expression.at(1, s) = (s == 13) ? Rational(6, 19) : Rational(1, 19);
    }
    lang.tx_prior = {Rational(1, 3), Rational(2, 3)};
    lang.rx_prior = {Rational(1, 2), Rational(1, 2)};
    model.channel = SemanticChannel::error_free(m);
    model.distortion = DistortionMeasure::hamming(2);
    return model;
}

inline Model nod_shake_fixture() { return generate_nodshake(); }

// N meanings expressed by their own dedicated message through a noiseless
// channel; interpretation is the exact inverse.
inline Model identity_model(int n) {
    Model model;
    auto& lang = model.language;
    for (int i = 0; i < n; ++i) {
        lang.meanings.push_back("w" + std::to_string(i + 1));
        lang.messages.push_back("s" + std::to_string(i + 1));
        lang.tx_prior.push_back(Rational(1, n));
        lang.rx_prior.push_back(Rational(1, n));
        model.cost.costs.push_back(Rational(i));
    }
    lang.expression = Mat::identity(n);
    lang.interpretation = Mat::identity(n);
    model.channel = SemanticChannel::error_free(n);
    model.distortion = DistortionMeasure::hamming(n);
    return model;
}

inline std::vector<Rational> random_distribution(std::mt19937_64& rng, int k) {
    std::vector<long> a(k);
    long total = 0;
    for (auto& x : a) {
        x = static_cast<long>(rng() % 7);
        total += x;
    }
    if (total == 0) {
        a[rng() % k] = 1;
        total = 1;
    }
    std::vector<Rational> row(k);
    for (int i = 0; i < k; ++i) row[i] = Rational(a[i], total);
    return row;
}

inline Mat random_stochastic(std::mt19937_64& rng, int rows, int cols) {
    Mat m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        auto row = random_distribution(rng, cols);
        for (int c = 0; c < cols; ++c) m.at(r, c) = row[c];
    }
    return m;
}

// Random model with optional rough edges: duplicate costs, zero prior
// entries, noisy channels, non-Hamming distortions.
inline Model random_model(std::mt19937_64& rng, int n, int m,
                          bool force_hamming = false,
                          bool force_error_free = false) {
    Model model;
    auto& lang = model.language;
    for (int i = 0; i < n; ++i) lang.meanings.push_back("w" + std::to_string(i + 1));
    for (int i = 0; i < m; ++i) lang.messages.push_back("s" + std::to_string(i + 1));
    lang.expression = random_stochastic(rng, n, m);
    lang.interpretation = random_stochastic(rng, m, n);
    lang.tx_prior = random_distribution(rng, n);
    lang.rx_prior = random_distribution(rng, n);

    Rational c(static_cast<long>(rng() % 3));
    for (int i = 0; i < m; ++i) {
        model.cost.costs.push_back(c);
        c += Rational(static_cast<long>(rng() % 3));
    }

    if (force_error_free || rng() % 2 == 0) {
        model.channel = SemanticChannel::error_free(m);
    } else {
        model.channel.kernel = random_stochastic(rng, m, m);
    }

    if (force_hamming || rng() % 2 == 0) {
        model.distortion = DistortionMeasure::hamming(n);
    } else {
        model.distortion.matrix = Mat(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j)
                    model.distortion.matrix.at(i, j) =
                        Rational(static_cast<long>(1 + rng() % 4));
    }
    return model;
}

// Permutation language with uniform priors, strictly increasing costs and a
// self-consistent deterministic interpretation: each meaning owns exactly
// one message. Satisfies every hypothesis and condition of the combined-
// optimality check.
inline Model block_permutation_model(std::mt19937_64& rng, int n) {
    Model model;
    auto& lang = model.language;
    std::vector<int> owner(n);  // owner[s] = meaning owning message s
    for (int i = 0; i < n; ++i) owner[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(owner[i], owner[rng() % (i + 1)]);

    Rational c(static_cast<long>(rng() % 3));
    for (int s = 0; s < n; ++s) {
        lang.messages.push_back("s" + std::to_string(s + 1));
        model.cost.costs.push_back(c);
        c += Rational(static_cast<long>(1 + rng() % 4));
    }
    lang.expression = Mat(n, n);
    lang.interpretation = Mat(n, n);
    for (int s = 0; s < n; ++s) {
        lang.expression.at(owner[s], s) = 1;
        lang.interpretation.at(s, owner[s]) = 1;
    }
    for (int w = 0; w < n; ++w) {
        lang.meanings.push_back("w" + std::to_string(w + 1));
        lang.tx_prior.push_back(Rational(1, n));
        lang.rx_prior.push_back(Rational(1, n));
    }
    model.channel = SemanticChannel::error_free(n);
    model.distortion = DistortionMeasure::hamming(n);
    return model;
}

}  // namespace semcom::test
