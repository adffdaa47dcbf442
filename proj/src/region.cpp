#include "semcom/region.hpp"

#include <random>
#include <stdexcept>

#include "semcom/core.hpp"

namespace semcom {

namespace {

// Pareto filter over (cost, distortion) pairs. cost_sign/phi_sign are +1
// when smaller is preferred, -1 when larger is preferred. Exact ties on
// both coordinates keep the lowest index.
std::vector<int> pareto_filter(const std::vector<Rational>& costs,
                               const std::vector<Rational>& phis,
                               int cost_sign, int phi_sign) {
    const int m = static_cast<int>(costs.size());
    auto better_eq = [](int sign, const Rational& a, const Rational& b) {
        return sign > 0 ? a <= b : a >= b;
    };
    std::vector<int> kept;
    for (int s = 0; s < m; ++s) {
        bool dominated = false;
        for (int t = 0; t < m && !dominated; ++t) {
            if (t == s) continue;
            if (!better_eq(cost_sign, costs[t], costs[s])) continue;
            if (!better_eq(phi_sign, phis[t], phis[s])) continue;
            if (costs[t] != costs[s] || phis[t] != phis[s] || t < s)
                dominated = true;
        }
        if (!dominated) kept.push_back(s);
    }
    return kept;
}

std::vector<int> merge_sorted(const std::vector<int>& a,
                              const std::vector<int>& b) {
    std::vector<int> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int next;
        if (j == b.size() || (i < a.size() && a[i] <= b[j])) {
            next = a[i++];
            if (j < b.size() && b[j] == next) ++j;
        } else {
            next = b[j++];
        }
        if (out.empty() || out.back() != next) out.push_back(next);
    }
    return out;
}

struct ChainBuilder {
    const SemanticLanguage& lang;
    const CostFunction& cost;
    const Mat& phi;
    const std::vector<std::vector<int>>& subsets;  // per meaning
    bool maximize;  // false: lower chain (argmin slope), true: upper chain
    std::mt19937_64* rng;  // null for lexicographic ties

    std::vector<FrontierPoint> run() const {
        const int n = lang.num_meanings();
        std::vector<int> pos(n, 0);  // position within each meaning's subset
        std::vector<FrontierPoint> chain;

        auto current_indices = [&] {
            std::vector<int> idx(n);
            for (int w = 0; w < n; ++w) idx[w] = subsets[w][pos[w]];
            return idx;
        };

        Rational L, D;
        for (int w = 0; w < n; ++w) {
            L += lang.tx_prior[w] * cost.costs[subsets[w][0]];
            D += lang.tx_prior[w] * phi.at(w, subsets[w][0]);
        }
        chain.push_back({current_indices(), L, D, std::nullopt});

        const Rational l_max = cost.max();
        while (L < l_max) {
            // Candidates: advance one meaning to a later subset member.
            struct Cand {
                int w;
                int pos;
                Rational slope;
            };
            std::vector<Cand> best;
            for (int w = 0; w < n; ++w) {
                const auto& set = subsets[w];
                int cur = set[pos[w]];
                for (int k = pos[w] + 1; k < static_cast<int>(set.size()); ++k) {
                    int m = set[k];
                    Rational dl = cost.costs[m] - cost.costs[cur];
                    if (dl.is_zero()) continue;  // cannot happen within a subset
                    Rational g = (phi.at(w, m) - phi.at(w, cur)) / dl;
                    if (best.empty()) {
                        best.push_back({w, k, g});
                    } else if (g == best.front().slope) {
                        best.push_back({w, k, g});
                    } else if (maximize ? g > best.front().slope
                                        : g < best.front().slope) {
                        best.clear();
                        best.push_back({w, k, g});
                    }
                }
            }
            if (best.empty()) break;  // all meanings saturated; L == l_max
            const Cand& pick =
                rng ? best[(*rng)() % best.size()] : best.front();
            int w = pick.w;
            int from = subsets[w][pos[w]];
            int to = subsets[w][pick.pos];
            L += lang.tx_prior[w] * (cost.costs[to] - cost.costs[from]);
            D += lang.tx_prior[w] * (phi.at(w, to) - phi.at(w, from));
            pos[w] = pick.pos;
            chain.push_back({current_indices(), L, D, pick.slope});
        }
        return chain;
    }
};

std::vector<Point2> to_points(const std::vector<FrontierPoint>& chain) {
    std::vector<Point2> pts;
    pts.reserve(chain.size());
    for (const auto& p : chain) pts.push_back({p.cost, p.distortion});
    return pts;
}

}  // namespace

MessageSubsets message_subsets(int w, const SemanticLanguage& lang,
                               const SemanticChannel& channel,
                               const DistortionMeasure& distortion,
                               const CostFunction& cost) {
    const int m = lang.num_messages();
    std::vector<Rational> phis(m);
    for (int s = 0; s < m; ++s)
        phis[s] = expected_distortion(w, s, lang, channel, distortion);

    MessageSubsets out;
    out.lower_left = pareto_filter(cost.costs, phis, +1, +1);
    out.lower_right = pareto_filter(cost.costs, phis, -1, +1);
    out.upper_left = pareto_filter(cost.costs, phis, +1, -1);
    out.upper_right = pareto_filter(cost.costs, phis, -1, -1);
    out.lower = merge_sorted(out.lower_left, out.lower_right);
    out.upper = merge_sorted(out.upper_left, out.upper_right);
    return out;
}

Rational tradeoff_slope(int w, int s_a, int s_b, const SemanticLanguage& lang,
                        const SemanticChannel& channel,
                        const DistortionMeasure& distortion,
                        const CostFunction& cost) {
    Rational dl = cost.costs[s_b] - cost.costs[s_a];
    if (dl.is_zero())
        throw std::domain_error("tradeoff slope undefined for equal costs");
    Rational da = expected_distortion(w, s_b, lang, channel, distortion) -
                  expected_distortion(w, s_a, lang, channel, distortion);
    return da / dl;
}

std::string TieBreak::describe() const {
    if (kind == Kind::lexicographic) return "lexicographic";
    return "seeded:" + std::to_string(seed);
}

std::vector<Point2> RegionFrontier::lower_points() const {
    return to_points(lower);
}

std::vector<Point2> RegionFrontier::upper_points() const {
    return to_points(upper);
}

RegionFrontier build_frontier(const SemanticLanguage& lang,
                              const SemanticChannel& channel,
                              const DistortionMeasure& distortion,
                              const CostFunction& cost, const TieBreak& tie) {
    const int n = lang.num_meanings();
    Mat phi = expected_distortion_table(lang, channel, distortion);

    std::vector<std::vector<int>> lower_sets(n), upper_sets(n);
    for (int w = 0; w < n; ++w) {
        MessageSubsets subs = message_subsets(w, lang, channel, distortion, cost);
        lower_sets[w] = subs.lower;
        upper_sets[w] = subs.upper;
    }

    std::optional<std::mt19937_64> rng;
    if (tie.kind == TieBreak::Kind::seeded) rng.emplace(tie.seed);
    std::mt19937_64* rng_ptr = rng ? &*rng : nullptr;

    RegionFrontier frontier;
    frontier.tie_break = tie;
    frontier.lower =
        ChainBuilder{lang, cost, phi, lower_sets, false, rng_ptr}.run();
    frontier.upper =
        ChainBuilder{lang, cost, phi, upper_sets, true, rng_ptr}.run();
    return frontier;
}

PiecewiseLinear chain_envelope(const std::vector<FrontierPoint>& chain) {
    std::vector<Point2> pts;
    for (const auto& p : chain) {
        Point2 q{p.cost, p.distortion};
        if (pts.empty() || !(pts.back() == q)) pts.push_back(q);
    }
    return PiecewiseLinear(pts);
}

std::vector<Point2> chain_vertices(const std::vector<FrontierPoint>& chain) {
    return normalize_chain(to_points(chain));
}

CriticalPoints critical_points(const RegionFrontier& frontier,
                               const SemanticLanguage& lang) {
    auto extremes = [&](const std::vector<FrontierPoint>& chain, bool maximize)
        -> std::array<DistortionCostPoint, 4> {
        Rational extreme = chain.front().distortion;
        for (const auto& p : chain) {
            if (maximize ? p.distortion > extreme : p.distortion < extreme)
                extreme = p.distortion;
        }
        const FrontierPoint* first = nullptr;
        const FrontierPoint* last = nullptr;
        for (const auto& p : chain) {
            if (p.distortion == extreme) {
                if (!first) first = &p;
                last = &p;
            }
        }
        auto mk = [&](const FrontierPoint& p) {
            return DistortionCostPoint{p.cost, p.distortion,
                                       encoder_label(p.encoder, lang)};
        };
        return {mk(chain.front()), mk(*first), mk(*last), mk(chain.back())};
    };
    return {extremes(frontier.lower, false), extremes(frontier.upper, true)};
}

Rational distortion_cost_function(const RegionFrontier& frontier,
                                  const Rational& L) {
    return chain_envelope(frontier.lower).at(L);
}

bool region_contains(const RegionFrontier& frontier, const Rational& L,
                     const Rational& D) {
    PiecewiseLinear lo = chain_envelope(frontier.lower);
    PiecewiseLinear hi = chain_envelope(frontier.upper);
    if (!lo.in_domain(L)) return false;
    return lo.at(L) <= D && D <= hi.at(L);
}

std::vector<TimeShareTerm> time_share_decompose(const EncodingScheme& u,
                                                std::uint64_t max_terms) {
    const int n = u.matrix.rows();
    const int m = u.matrix.cols();
    std::vector<std::vector<int>> supports(n);
    std::uint64_t count = 1;
    for (int w = 0; w < n; ++w) {
        for (int s = 0; s < m; ++s)
            if (!u.matrix.at(w, s).is_zero()) supports[w].push_back(s);
        if (supports[w].empty())
            throw std::invalid_argument("encoder row has empty support");
        if (count > max_terms / supports[w].size())
            throw std::invalid_argument("time-share decomposition too large");
        count *= supports[w].size();
    }

    std::vector<TimeShareTerm> terms;
    terms.reserve(count);
    std::vector<int> pick(n, 0);
    while (true) {
        TimeShareTerm t;
        t.weight = 1;
        t.encoder.resize(n);
        for (int w = 0; w < n; ++w) {
            t.encoder[w] = supports[w][pick[w]];
            t.weight *= u.matrix.at(w, t.encoder[w]);
        }
        terms.push_back(std::move(t));
        int w = n - 1;
        while (w >= 0 && ++pick[w] == static_cast<int>(supports[w].size())) {
            pick[w] = 0;
            --w;
        }
        if (w < 0) break;
    }
    return terms;
}

std::string encoder_label(const std::vector<int>& encoder,
                          const SemanticLanguage& lang) {
    std::string out = "{";
    for (std::size_t w = 0; w < encoder.size(); ++w) {
        if (w) out += ",";
        out += lang.messages[encoder[w]];
    }
    return out + "}";
}

}  // namespace semcom
