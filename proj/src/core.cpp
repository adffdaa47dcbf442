#include "semcom/core.hpp"

#include <cmath>
#include <stdexcept>

namespace semcom {

namespace {

void require_dims(const SemanticLanguage& lang, const SemanticChannel& channel,
                  const DistortionMeasure& distortion) {
    const int n = lang.num_meanings();
    const int m = lang.num_messages();
    if (channel.kernel.rows() != m || channel.kernel.cols() != m)
        throw std::invalid_argument("channel dimensions do not match language");
    if (distortion.matrix.rows() != n || distortion.matrix.cols() != n)
        throw std::invalid_argument("distortion dimensions do not match language");
}

}  // namespace

Rational expected_distortion(int w, int s, const SemanticLanguage& lang,
                             const SemanticChannel& channel,
                             const DistortionMeasure& distortion) {
    require_dims(lang, channel, distortion);
    const int n = lang.num_meanings();
    const int m = lang.num_messages();
    Rational total;
    for (int shat = 0; shat < m; ++shat) {
        const Rational& c = channel.kernel.at(s, shat);
        if (c.is_zero()) continue;
        Rational inner;
        for (int what = 0; what < n; ++what) {
            inner += lang.interpretation.at(shat, what) * distortion.matrix.at(w, what);
        }
        total += c * inner;
    }
    return total;
}

Mat expected_distortion_table(const SemanticLanguage& lang,
                              const SemanticChannel& channel,
                              const DistortionMeasure& distortion) {
    require_dims(lang, channel, distortion);
    const int n = lang.num_meanings();
    const int m = lang.num_messages();
    // q(what|shat) d(w,what) summed over what, per (w, shat); then one
    // channel mix per (w, s).
    Mat post(n, m);
    for (int w = 0; w < n; ++w)
        for (int shat = 0; shat < m; ++shat) {
            Rational inner;
            for (int what = 0; what < n; ++what)
                inner += lang.interpretation.at(shat, what) *
                         distortion.matrix.at(w, what);
            post.at(w, shat) = inner;
        }
    Mat table(n, m);
    for (int w = 0; w < n; ++w)
        for (int s = 0; s < m; ++s) {
            Rational total;
            for (int shat = 0; shat < m; ++shat) {
                const Rational& c = channel.kernel.at(s, shat);
                if (!c.is_zero()) total += c * post.at(w, shat);
            }
            table.at(w, s) = total;
        }
    return table;
}

Rational average_distortion_enc(const EncodingScheme& u,
                                const SemanticLanguage& lang,
                                const SemanticChannel& channel,
                                const DistortionMeasure& distortion) {
    const int n = lang.num_meanings();
    const int m = lang.num_messages();
    if (u.matrix.rows() != n || u.matrix.cols() != m)
        throw std::invalid_argument("encoding scheme dimensions do not match");
    Mat phi = expected_distortion_table(lang, channel, distortion);
    Rational total;
    for (int w = 0; w < n; ++w) {
        if (lang.tx_prior[w].is_zero()) continue;
        Rational row;
        for (int s = 0; s < m; ++s) {
            const Rational& us = u.matrix.at(w, s);
            if (!us.is_zero()) row += us * phi.at(w, s);
        }
        total += lang.tx_prior[w] * row;
    }
    return total;
}

Rational average_cost(const EncodingScheme& u, const SemanticLanguage& lang,
                      const CostFunction& cost) {
    const int n = lang.num_meanings();
    const int m = lang.num_messages();
    if (u.matrix.rows() != n || u.matrix.cols() != m)
        throw std::invalid_argument("encoding scheme dimensions do not match");
    if (static_cast<int>(cost.costs.size()) != m)
        throw std::invalid_argument("cost vector length does not match");
    Rational total;
    for (int w = 0; w < n; ++w) {
        Rational row;
        for (int s = 0; s < m; ++s) {
            const Rational& us = u.matrix.at(w, s);
            if (!us.is_zero()) row += us * cost.costs[s];
        }
        total += lang.tx_prior[w] * row;
    }
    return total;
}

std::vector<Rational> message_marginal(const SemanticLanguage& lang,
                                       const std::vector<Rational>& prior) {
    const int n = lang.num_meanings();
    const int m = lang.num_messages();
    std::vector<Rational> ps(m);
    for (int s = 0; s < m; ++s)
        for (int w = 0; w < n; ++w)
            ps[s] += prior[w] * lang.expression.at(w, s);
    return ps;
}

Mat posterior_interpretation(const SemanticLanguage& lang,
                             const std::vector<Rational>& prior) {
    const int n = lang.num_meanings();
    const int m = lang.num_messages();
    std::vector<Rational> ps = message_marginal(lang, prior);
    Mat q(m, n);
    Rational uniform(1, n);
    for (int s = 0; s < m; ++s) {
        if (ps[s].is_zero()) {
            for (int w = 0; w < n; ++w) q.at(s, w) = uniform;
            continue;
        }
        for (int w = 0; w < n; ++w)
            q.at(s, w) = lang.expression.at(w, s) * prior[w] / ps[s];
    }
    return q;
}

SelfConsistencyReport is_self_consistent(const SemanticLanguage& lang) {
    SelfConsistencyReport rep;
    const int n = lang.num_meanings();
    const int m = lang.num_messages();
    std::vector<Rational> ps = message_marginal(lang, lang.tx_prior);
    for (int s = 0; s < m; ++s) {
        if (ps[s].is_zero()) {
            rep.vacuous_messages.push_back(s);
            continue;
        }
        for (int w = 0; w < n; ++w) {
            Rational posterior = lang.expression.at(w, s) * lang.tx_prior[w] / ps[s];
            if (posterior != lang.interpretation.at(s, w)) {
                if (rep.consistent) {
                    rep.consistent = false;
                    rep.counterexample = {w, s};
                }
            }
        }
        if (!rep.consistent && rep.counterexample) break;
    }
    return rep;
}

double semantic_entropy(const std::vector<Rational>& world_prior,
                        const std::vector<bool>& satisfies) {
    if (world_prior.size() != satisfies.size())
        throw std::invalid_argument("satisfaction vector length mismatch");
    Rational mass;
    for (std::size_t i = 0; i < world_prior.size(); ++i)
        if (satisfies[i]) mass += world_prior[i];
    if (!(mass > Rational(0)))
        throw std::domain_error("no satisfying world has positive mass");
    return -std::log2(mass.to_double());
}

}  // namespace semcom
