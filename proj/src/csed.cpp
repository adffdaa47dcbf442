#include "semcom/csed.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "semcom/core.hpp"

namespace semcom {

std::vector<std::vector<int>> frontier_encoders(const RegionFrontier& f) {
    std::vector<std::vector<int>> out;
    out.reserve(f.lower.size() + f.upper.size());
    for (const auto& p : f.lower) out.push_back(p.encoder);
    for (const auto& p : f.upper) out.push_back(p.encoder);
    return out;
}

Rational redecoded_distortion(const std::vector<int>& encoder,
                              const DecodingScheme& v,
                              const SemanticLanguage& lang,
                              const SemanticChannel& channel,
                              const DistortionMeasure& distortion) {
    const int n = lang.num_meanings();
    const int m = lang.num_messages();
    Rational total;
    for (int w = 0; w < n; ++w) {
        if (lang.tx_prior[w].is_zero()) continue;
        int s = encoder[w];
        Rational acc;
        for (int shat = 0; shat < m; ++shat) {
            const Rational& c = channel.kernel.at(s, shat);
            if (c.is_zero()) continue;
            Rational inner;
            for (int what = 0; what < n; ++what) {
                const Rational& vv = v.matrix.at(shat, what);
                if (!vv.is_zero()) inner += vv * distortion.matrix.at(w, what);
            }
            acc += c * inner;
        }
        total += lang.tx_prior[w] * acc;
    }
    return total;
}

DistortionCostPoint csed_evaluate(const std::vector<Rational>& weights,
                                  const RegionFrontier& frontier,
                                  const SemanticLanguage& lang,
                                  const SemanticChannel& channel,
                                  const DistortionMeasure& distortion,
                                  const CostFunction& cost) {
    auto encoders = frontier_encoders(frontier);
    if (weights.size() != encoders.size())
        throw std::invalid_argument("mixture weight count does not match frontier");
    Rational wsum;
    for (const auto& w : weights) {
        if (w.is_negative())
            throw std::invalid_argument("mixture weights must be nonnegative");
        wsum += w;
    }
    if (wsum != Rational(1))
        throw std::invalid_argument("mixture weights must sum to 1");

    DecodingScheme vq =
        map_decoder(lang, channel, distortion, PriorChoice::receiver);
    Rational L, D;
    std::string prov = "mix[";
    bool first = true;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i].is_zero()) continue;
        const auto& enc = encoders[i];
        Rational li;
        for (int w = 0; w < lang.num_meanings(); ++w)
            li += lang.tx_prior[w] * cost.costs[enc[w]];
        L += weights[i] * li;
        D += weights[i] *
             redecoded_distortion(enc, vq, lang, channel, distortion);
        if (!first) prov += " + ";
        prov += weights[i].str() + "*" + encoder_label(enc, lang);
        first = false;
    }
    prov += "]";
    return {L, D, prov};
}

bool CsedRegion::contains(const Rational& L, const Rational& D) const {
    PiecewiseLinear lo{lower};
    PiecewiseLinear hi{upper};
    if (!lo.in_domain(L)) return false;
    return lo.at(L) <= D && D <= hi.at(L);
}

Rational CsedRegion::lower_envelope_at(const Rational& L) const {
    return PiecewiseLinear{lower}.at(L);
}

CsedRegion csed_region(const SemanticLanguage& lang,
                       const SemanticChannel& channel,
                       const DistortionMeasure& distortion,
                       const CostFunction& cost, const TieBreak& tie) {
    RegionFrontier frontier = build_frontier(lang, channel, distortion, cost, tie);
    DecodingScheme vq =
        map_decoder(lang, channel, distortion, PriorChoice::receiver);

    CsedRegion region;
    region.tie_break = tie;
    std::vector<Point2> pts;
    auto add = [&](const FrontierPoint& p) {
        Rational d = redecoded_distortion(p.encoder, vq, lang, channel, distortion);
        region.generators.push_back({p.cost, d, encoder_label(p.encoder, lang)});
        pts.push_back({p.cost, d});
    };
    for (const auto& p : frontier.lower) add(p);
    for (const auto& p : frontier.upper) add(p);

    region.lower = lower_hull(pts);
    region.upper = upper_hull(pts);
    return region;
}

namespace {

std::vector<std::vector<int>> row_argmin_sets(const Mat& table) {
    // Per row, the set of column indices attaining the row minimum.
    std::vector<std::vector<int>> out(table.rows());
    for (int r = 0; r < table.rows(); ++r) {
        Rational best = table.at(r, 0);
        for (int c = 1; c < table.cols(); ++c)
            if (table.at(r, c) < best) best = table.at(r, c);
        for (int c = 0; c < table.cols(); ++c)
            if (table.at(r, c) == best) out[r].push_back(c);
    }
    return out;
}

bool pairwise_disjoint(const std::vector<std::vector<int>>& sets) {
    std::set<int> seen;
    for (const auto& s : sets) {
        for (int x : s) {
            if (!seen.insert(x).second) return false;
        }
    }
    return true;
}

}  // namespace

Theorem4Report check_theorem4(const SemanticLanguage& lang,
                              const SemanticChannel& channel,
                              const DistortionMeasure& distortion,
                              const RegionFrontier& frontier) {
    Theorem4Report rep;
    rep.error_free_channel = channel.is_error_free();
    rep.symmetric_distortion = distortion.is_symmetric();
    if (!rep.error_free_channel)
        rep.notes.push_back("hypothesis fails: channel is not error-free");
    if (!rep.symmetric_distortion)
        rep.notes.push_back("hypothesis fails: distortion is not symmetric");

    rep.matched_prior = lang.tx_prior == lang.rx_prior;
    if (!rep.matched_prior)
        rep.notes.push_back("condition 1 fails: receiver prior differs from transmitter prior");

    SelfConsistencyReport sc = is_self_consistent(lang);
    rep.self_consistent = sc.consistent;
    if (!sc.consistent && sc.counterexample) {
        rep.notes.push_back("condition 2 fails: interpretation is not the posterior at (" +
                            lang.meanings[sc.counterexample->first] + ", " +
                            lang.messages[sc.counterexample->second] + ")");
    }

    Mat phi = expected_distortion_table(lang, channel, distortion);
    rep.phi_argmin_disjoint = pairwise_disjoint(row_argmin_sets(phi));
    if (!rep.phi_argmin_disjoint)
        rep.notes.push_back("condition 3 fails: two meanings share a best message");

    // Messages actually used by some frontier encoder.
    std::set<int> used;
    for (const auto& enc : frontier_encoders(frontier))
        used.insert(enc.begin(), enc.end());
    Mat psi = decoding_risk_table(lang, channel, distortion,
                                  PriorChoice::receiver);
    std::vector<std::vector<int>> used_sets;
    for (int s : used) {
        Rational best = psi.at(s, 0);
        for (int w = 1; w < lang.num_meanings(); ++w)
            if (psi.at(s, w) < best) best = psi.at(s, w);
        std::vector<int> set;
        for (int w = 0; w < lang.num_meanings(); ++w)
            if (psi.at(s, w) == best) set.push_back(w);
        used_sets.push_back(std::move(set));
    }
    rep.psi_argmin_disjoint = pairwise_disjoint(used_sets);
    if (!rep.psi_argmin_disjoint)
        rep.notes.push_back("condition 4 fails: two used messages decode to a shared meaning");

    rep.verdict = rep.error_free_channel && rep.symmetric_distortion &&
                  rep.matched_prior && rep.self_consistent &&
                  rep.phi_argmin_disjoint && rep.psi_argmin_disjoint;
    return rep;
}

StrategyComparison compare_strategies(const SemanticLanguage& lang,
                                      const SemanticChannel& channel,
                                      const DistortionMeasure& distortion,
                                      const CostFunction& cost,
                                      const TieBreak& tie) {
    StrategyComparison cmp{};
    cmp.frontier = build_frontier(lang, channel, distortion, cost, tie);
    cmp.decoding = decoding_region(lang, channel, distortion, cost);

    DecodingScheme q{lang.interpretation, std::nullopt};
    cmp.interpretation_distortion =
        decoder_distortion(q, lang, channel, distortion);
    DecodingScheme vq =
        map_decoder(lang, channel, distortion, PriorChoice::receiver);
    cmp.map_rx_distortion = decoder_distortion(vq, lang, channel, distortion);

    cmp.csed = csed_region(lang, channel, distortion, cost, tie);

    const FrontierPoint* floor = &cmp.frontier.lower.front();
    for (const auto& p : cmp.frontier.lower)
        if (p.distortion < floor->distortion) floor = &p;
    cmp.encoding_floor = {floor->cost, floor->distortion,
                          encoder_label(floor->encoder, lang)};
    Rational redec =
        redecoded_distortion(floor->encoder, vq, lang, channel, distortion);
    cmp.csed_at_floor = {floor->cost, redec,
                         encoder_label(floor->encoder, lang) + " + MAP(rx)"};

    const Rational& enc_d = cmp.encoding_floor.distortion;
    const Rational& dec_d = cmp.map_rx_distortion;
    const Rational& csed_d = cmp.csed_at_floor.distortion;
    cmp.csed_beats_both = csed_d < enc_d && csed_d < dec_d;
    cmp.csed_worse_than_both = csed_d > enc_d && csed_d > dec_d;
    return cmp;
}

}  // namespace semcom
