#include "semcom/decoding.hpp"

#include <stdexcept>

#include "semcom/core.hpp"

namespace semcom {

namespace {

const std::vector<Rational>& pick_prior(const SemanticLanguage& lang,
                                        PriorChoice prior) {
    return prior == PriorChoice::transmitter ? lang.tx_prior : lang.rx_prior;
}

void require_hamming(const DistortionMeasure& distortion) {
    if (!distortion.is_hamming())
        throw std::domain_error("operation requires the Hamming distortion");
}

}  // namespace

Mat effective_likelihood(const SemanticLanguage& lang,
                         const SemanticChannel& channel) {
    const int n = lang.num_meanings();
    const int m = lang.num_messages();
    if (channel.kernel.rows() != m)
        throw std::invalid_argument("channel dimensions do not match language");
    Mat like(n, m);
    for (int w = 0; w < n; ++w)
        for (int shat = 0; shat < m; ++shat) {
            Rational acc;
            for (int s = 0; s < m; ++s) {
                const Rational& p = lang.expression.at(w, s);
                if (!p.is_zero()) acc += p * channel.kernel.at(s, shat);
            }
            like.at(w, shat) = acc;
        }
    return like;
}

Mat decoding_risk_table(const SemanticLanguage& lang,
                        const SemanticChannel& channel,
                        const DistortionMeasure& distortion,
                        PriorChoice prior) {
    const int n = lang.num_meanings();
    const int m = lang.num_messages();
    if (distortion.matrix.rows() != n)
        throw std::invalid_argument("distortion dimensions do not match language");
    const auto& pw = pick_prior(lang, prior);
    Mat like = effective_likelihood(lang, channel);
    Mat psi(m, n);
    for (int shat = 0; shat < m; ++shat)
        for (int what = 0; what < n; ++what) {
            Rational acc;
            for (int w = 0; w < n; ++w) {
                if (pw[w].is_zero()) continue;
                const Rational& d = distortion.matrix.at(w, what);
                if (!d.is_zero()) acc += pw[w] * like.at(w, shat) * d;
            }
            psi.at(shat, what) = acc;
        }
    return psi;
}

Rational decoder_distortion(const DecodingScheme& v,
                            const SemanticLanguage& lang,
                            const SemanticChannel& channel,
                            const DistortionMeasure& distortion) {
    const int n = lang.num_meanings();
    const int m = lang.num_messages();
    if (v.matrix.rows() != m || v.matrix.cols() != n)
        throw std::invalid_argument("decoding scheme dimensions do not match");
    Mat psi = decoding_risk_table(lang, channel, distortion,
                                  PriorChoice::transmitter);
    Rational total;
    for (int shat = 0; shat < m; ++shat)
        for (int what = 0; what < n; ++what) {
            const Rational& vv = v.matrix.at(shat, what);
            if (!vv.is_zero()) total += vv * psi.at(shat, what);
        }
    return total;
}

Rational expression_cost(const SemanticLanguage& lang,
                         const CostFunction& cost) {
    const int n = lang.num_meanings();
    const int m = lang.num_messages();
    Rational total;
    for (int w = 0; w < n; ++w) {
        Rational row;
        for (int s = 0; s < m; ++s) {
            const Rational& p = lang.expression.at(w, s);
            if (!p.is_zero()) row += p * cost.costs[s];
        }
        total += lang.tx_prior[w] * row;
    }
    return total;
}

DecodingScheme map_decoder(const SemanticLanguage& lang,
                           const SemanticChannel& channel,
                           const DistortionMeasure& distortion,
                           PriorChoice prior) {
    const int n = lang.num_meanings();
    const int m = lang.num_messages();
    Mat psi = decoding_risk_table(lang, channel, distortion, prior);
    std::vector<int> idx(m, 0);
    for (int shat = 0; shat < m; ++shat) {
        int best = 0;
        for (int what = 1; what < n; ++what)
            if (psi.at(shat, what) < psi.at(shat, best)) best = what;
        idx[shat] = best;
    }
    return DecodingScheme::from_indices(idx, n);
}

DecodingRegion decoding_region(const SemanticLanguage& lang,
                               const SemanticChannel& channel,
                               const DistortionMeasure& distortion,
                               const CostFunction& cost) {
    const int n = lang.num_meanings();
    const int m = lang.num_messages();
    Mat psi = decoding_risk_table(lang, channel, distortion,
                                  PriorChoice::transmitter);
    std::vector<int> lo(m), hi(m);
    Rational d_min, d_max;
    for (int shat = 0; shat < m; ++shat) {
        int best = 0, worst = 0;
        for (int what = 1; what < n; ++what) {
            if (psi.at(shat, what) < psi.at(shat, best)) best = what;
            if (psi.at(shat, what) > psi.at(shat, worst)) worst = what;
        }
        lo[shat] = best;
        hi[shat] = worst;
        d_min += psi.at(shat, best);
        d_max += psi.at(shat, worst);
    }
    return {expression_cost(lang, cost), d_min, d_max,
            DecodingScheme::from_indices(lo, n),
            DecodingScheme::from_indices(hi, n)};
}

namespace {

std::vector<int> argmax_set(const Mat& like, const std::vector<Rational>& prior,
                            int shat) {
    const int n = like.rows();
    std::vector<Rational> score(n);
    for (int w = 0; w < n; ++w) score[w] = prior[w] * like.at(w, shat);
    Rational best = score[0];
    for (int w = 1; w < n; ++w)
        if (score[w] > best) best = score[w];
    std::vector<int> out;
    for (int w = 0; w < n; ++w)
        if (score[w] == best) out.push_back(w);
    return out;
}

}  // namespace

HammingOptimalityReport hamming_optimality_check(
    const SemanticLanguage& lang, const SemanticChannel& channel,
    const DistortionMeasure& distortion) {
    require_hamming(distortion);
    const int m = lang.num_messages();
    Mat like = effective_likelihood(lang, channel);
    HammingOptimalityReport rep;
    for (int shat = 0; shat < m; ++shat) {
        HammingOptimalityReport::Entry e;
        e.message = shat;
        e.rx_argmax = argmax_set(like, lang.rx_prior, shat);
        e.tx_argmax = argmax_set(like, lang.tx_prior, shat);
        e.contained = true;
        for (int w : e.rx_argmax) {
            bool found = false;
            for (int t : e.tx_argmax)
                if (t == w) found = true;
            if (!found) e.contained = false;
        }
        if (!e.contained) rep.ok = false;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

SimplexPoint simplex_embed(int shat, const SemanticLanguage& lang,
                           const SemanticChannel& channel,
                           const DistortionMeasure& distortion,
                           PriorChoice prior) {
    const int n = lang.num_meanings();
    const auto& pw = pick_prior(lang, prior);
    Mat like = effective_likelihood(lang, channel);
    std::vector<Rational> raw(n);
    Rational norm;
    for (int w = 0; w < n; ++w) {
        raw[w] = pw[w] * like.at(w, shat);
        norm += raw[w];
    }
    if (norm.is_zero())
        throw std::domain_error("message unreachable under this prior");
    SimplexPoint pt;
    pt.alpha.resize(n);
    for (int w = 0; w < n; ++w) pt.alpha[w] = raw[w] / norm;
    // Decision region of the normalized posterior: least posterior risk.
    int best = 0;
    Rational best_risk;
    for (int what = 0; what < n; ++what) {
        Rational risk;
        for (int w = 0; w < n; ++w)
            risk += pt.alpha[w] * distortion.matrix.at(w, what);
        if (what == 0 || risk < best_risk) {
            best = what;
            best_risk = risk;
        }
    }
    pt.region = best;
    return pt;
}

DecodingScheme refine_interpretation(const SemanticLanguage& lang,
                                     const SemanticChannel& channel,
                                     const DistortionMeasure& distortion) {
    const int n = lang.num_meanings();
    const int m = lang.num_messages();
    DecodingScheme v;
    v.matrix = lang.interpretation;

    Mat like = effective_likelihood(lang, channel);
    std::vector<Rational> ps(m);
    for (int shat = 0; shat < m; ++shat)
        for (int w = 0; w < n; ++w)
            ps[shat] += lang.tx_prior[w] * like.at(w, shat);

    for (int shat = 0; shat < m; ++shat) {
        if (ps[shat].is_zero()) continue;  // unreachable, contributes nothing

        std::vector<int> interp_support;  // meanings the language allows
        for (int w = 0; w < n; ++w)
            if (!lang.interpretation.at(shat, w).is_zero())
                interp_support.push_back(w);
        std::vector<int> source_support;  // meanings that can cause shat
        for (int w = 0; w < n; ++w)
            if (!like.at(w, shat).is_zero()) source_support.push_back(w);
        if (interp_support.empty() || source_support.empty()) continue;

        // Collapse: some allowed meaning is at least as close to every
        // possible source as any other allowed meaning is.
        int collapse = -1;
        for (int cand : interp_support) {
            Rational worst;
            bool first = true;
            for (int w : source_support) {
                const Rational& d = distortion.matrix.at(w, cand);
                if (first || d > worst) worst = d, first = false;
            }
            bool ok = true;
            for (int w : source_support) {
                for (int other : interp_support) {
                    if (other == cand) continue;
                    if (distortion.matrix.at(w, other) < worst) ok = false;
                }
                if (!ok) break;
            }
            if (ok) {
                collapse = cand;
                break;
            }
        }
        if (collapse >= 0) {
            for (int w = 0; w < n; ++w)
                v.matrix.at(shat, w) = (w == collapse) ? Rational(1) : Rational(0);
            continue;
        }

        // Removal: some allowed meaning is at least as far from every
        // possible source as any other allowed meaning is.
        if (interp_support.size() < 2) continue;
        int removed = -1;
        for (int cand : interp_support) {
            if (lang.interpretation.at(shat, cand) == Rational(1)) continue;
            Rational nearest;
            bool first = true;
            for (int w : source_support) {
                const Rational& d = distortion.matrix.at(w, cand);
                if (first || d < nearest) nearest = d, first = false;
            }
            bool ok = true;
            for (int w : source_support) {
                for (int other : interp_support) {
                    if (other == cand) continue;
                    if (distortion.matrix.at(w, other) > nearest) ok = false;
                }
                if (!ok) break;
            }
            if (ok) {
                removed = cand;
                break;
            }
        }
        if (removed >= 0) {
            Rational keep = Rational(1) - lang.interpretation.at(shat, removed);
            for (int w = 0; w < n; ++w) {
                v.matrix.at(shat, w) =
                    (w == removed) ? Rational(0)
                                   : lang.interpretation.at(shat, w) / keep;
            }
        }
    }
    return v;
}

Rational decoding_gap(const SemanticLanguage& lang,
                      const SemanticChannel& channel,
                      const DistortionMeasure& distortion) {
    require_hamming(distortion);
    DecodingScheme q{lang.interpretation, std::nullopt};
    DecodingScheme vq =
        map_decoder(lang, channel, distortion, PriorChoice::receiver);
    return decoder_distortion(q, lang, channel, distortion) -
           decoder_distortion(vq, lang, channel, distortion);
}

}  // namespace semcom
