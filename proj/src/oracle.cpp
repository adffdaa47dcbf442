#include "semcom/oracle.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "semcom/core.hpp"
#include "semcom/decoding.hpp"

namespace semcom {

namespace {

void check_budget(std::uint64_t base, int exp, std::uint64_t budget,
                  const char* what) {
    std::uint64_t needed = 1;
    bool overflow = false;
    for (int i = 0; i < exp && !overflow; ++i) {
        if (base != 0 && needed > UINT64_MAX / base) {
            overflow = true;
        } else {
            needed *= base;
        }
    }
    if (overflow || needed > budget) {
        throw std::invalid_argument(
            std::string(what) + " enumeration needs " +
            (overflow ? "more than " + std::to_string(UINT64_MAX)
                      : std::to_string(needed)) +
            " candidates, over the budget of " + std::to_string(budget));
    }
}

bool advance_odometer(std::vector<int>& digits, int radix) {
    int i = static_cast<int>(digits.size()) - 1;
    while (i >= 0 && ++digits[i] == radix) digits[i--] = 0;
    return i >= 0;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t uniform_u64_below(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t reject_below = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t x;
    do {
        x = rng();
    } while (x < reject_below);
    return x % bound;
}

mpz_class uniform_mpz_below(std::mt19937_64& rng, const mpz_class& bound) {
    if (bound.fits_ulong_p()) {
        unsigned long b = bound.get_ui();
        if (b == 1) return 0;
        return mpz_class(static_cast<unsigned long>(
            uniform_u64_below(rng, static_cast<std::uint64_t>(b))));
    }
    std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    std::size_t words = (bits + 63) / 64;
    mpz_class range;
    mpz_ui_pow_ui(range.get_mpz_t(), 2, words * 64);
    mpz_class reject_below = range % bound;
    while (true) {
        mpz_class x = 0;
        for (std::size_t i = 0; i < words; ++i) {
            x <<= 64;
            x += mpz_class(static_cast<unsigned long>(rng()));
        }
        if (x >= reject_below) return x % bound;
    }
}

// Exact categorical sampler over a rational distribution row.
struct Sampler {
    int singleton = -1;         // set when the row has a single support point
    mpz_class den;              // common denominator
    std::vector<mpz_class> cum; // cumulative numerators, one per index
    std::vector<int> index;     // matching original indices

    static Sampler build(const std::vector<Rational>& row) {
        Sampler s;
        int support = 0, last = -1;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (!row[i].is_zero()) {
                ++support;
                last = static_cast<int>(i);
            }
        }
        if (support == 0)
            throw std::invalid_argument("cannot sample from an all-zero row");
        if (support == 1) {
            s.singleton = last;
            return s;
        }
        s.den = 1;
        for (const auto& r : row)
            if (!r.is_zero()) mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(),
                                      r.den().get_mpz_t());
        mpz_class acc = 0;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i].is_zero()) continue;
            acc += row[i].num() * (s.den / row[i].den());
            s.cum.push_back(acc);
            s.index.push_back(static_cast<int>(i));
        }
        return s;
    }

    int draw(std::mt19937_64& rng) const {
        if (singleton >= 0) return singleton;
        mpz_class x = uniform_mpz_below(rng, den);
        for (std::size_t i = 0; i < cum.size(); ++i)
            if (x < cum[i]) return index[i];
        return index.back();  // unreachable: cum.back() == den
    }
};

std::vector<Rational> mat_row(const Mat& m, int r) {
    std::vector<Rational> out(m.cols());
    for (int c = 0; c < m.cols(); ++c) out[c] = m.at(r, c);
    return out;
}

}  // namespace

std::vector<EnumeratedEncoder> enumerate_encoding_points(
    const SemanticLanguage& lang, const SemanticChannel& channel,
    const DistortionMeasure& distortion, const CostFunction& cost,
    const EnumerationBudget& budget) {
    const int n = lang.num_meanings();
    const int m = lang.num_messages();
    check_budget(m, n, budget.max_encoders, "encoder");

    Mat phi = expected_distortion_table(lang, channel, distortion);
    std::vector<EnumeratedEncoder> out;
    std::vector<int> idx(n, 0);
    do {
        Rational l, d;
        for (int w = 0; w < n; ++w) {
            l += lang.tx_prior[w] * cost.costs[idx[w]];
            d += lang.tx_prior[w] * phi.at(w, idx[w]);
        }
        out.push_back({idx, l, d});
    } while (advance_odometer(idx, m));
    return out;
}

std::vector<EnumeratedDecoder> enumerate_decoders(
    const SemanticLanguage& lang, const SemanticChannel& channel,
    const DistortionMeasure& distortion, const EnumerationBudget& budget) {
    const int n = lang.num_meanings();
    const int m = lang.num_messages();
    check_budget(n, m, budget.max_decoders, "decoder");

    Mat psi = decoding_risk_table(lang, channel, distortion,
                                  PriorChoice::transmitter);
    std::vector<EnumeratedDecoder> out;
    std::vector<int> idx(m, 0);
    do {
        Rational d;
        for (int shat = 0; shat < m; ++shat) d += psi.at(shat, idx[shat]);
        out.push_back({idx, d});
    } while (advance_odometer(idx, n));
    return out;
}

GlobalOptimum global_optimum(const SemanticLanguage& lang,
                             const SemanticChannel& channel,
                             const DistortionMeasure& distortion,
                             const CostFunction& cost,
                             const EnumerationBudget& budget) {
    const int n = lang.num_meanings();
    const int m = lang.num_messages();
    check_budget(m, n, budget.max_encoders, "encoder");

    GlobalOptimum out;
    std::vector<int> idx(n, 0);
    do {
        Rational l;
        for (int w = 0; w < n; ++w) l += lang.tx_prior[w] * cost.costs[idx[w]];
        // Optimal decoder against this encoder, message by message.
        Rational d;
        for (int shat = 0; shat < m; ++shat) {
            Rational best;
            bool first = true;
            for (int what = 0; what < n; ++what) {
                Rational risk;
                for (int w = 0; w < n; ++w) {
                    if (lang.tx_prior[w].is_zero()) continue;
                    const Rational& c = channel.kernel.at(idx[w], shat);
                    if (c.is_zero()) continue;
                    risk += lang.tx_prior[w] * c * distortion.matrix.at(w, what);
                }
                if (first || risk < best) best = risk, first = false;
            }
            d += best;
        }
        out.points.push_back({l, d});
    } while (advance_odometer(idx, m));
    out.envelope = lower_hull(out.points);
    return out;
}

SimulationResult simulate(const SimulationConfig& config,
                          const SemanticLanguage& lang,
                          const SemanticChannel& channel,
                          const DistortionMeasure& distortion,
                          const CostFunction& cost) {
    if (config.trials < 1)
        throw std::invalid_argument("simulation needs at least one trial");
    const int n = lang.num_meanings();
    const int m = lang.num_messages();

    const Mat& enc =
        config.encoder ? config.encoder->matrix : lang.expression;
    const Mat& dec =
        config.decoder ? config.decoder->matrix : lang.interpretation;
    if (enc.rows() != n || enc.cols() != m)
        throw std::invalid_argument("encoder dimensions do not match");
    if (dec.rows() != m || dec.cols() != n)
        throw std::invalid_argument("decoder dimensions do not match");

    Sampler prior = Sampler::build(lang.tx_prior);
    std::vector<Sampler> enc_rows, chan_rows, dec_rows;
    for (int w = 0; w < n; ++w) enc_rows.push_back(Sampler::build(mat_row(enc, w)));
    for (int s = 0; s < m; ++s)
        chan_rows.push_back(Sampler::build(mat_row(channel.kernel, s)));
    for (int s = 0; s < m; ++s) dec_rows.push_back(Sampler::build(mat_row(dec, s)));

    SimulationResult res;
    res.trials = config.trials;
    res.received_counts.assign(m, 0);
    Rational sum_d, sum_d2, sum_l, sum_l2;

    constexpr std::uint64_t kBlock = 4096;
    std::uint64_t done = 0, block = 0;
    while (done < config.trials) {
        std::uint64_t count = std::min(kBlock, config.trials - done);
        std::mt19937_64 rng(splitmix64(config.seed + block));
        for (std::uint64_t t = 0; t < count; ++t) {
            int w = prior.draw(rng);
            int s = enc_rows[w].draw(rng);
            int shat = chan_rows[s].draw(rng);
            int what = dec_rows[shat].draw(rng);
            const Rational& d = distortion.matrix.at(w, what);
            const Rational& l = cost.costs[s];
            sum_d += d;
            sum_d2 += d * d;
            sum_l += l;
            sum_l2 += l * l;
            ++res.received_counts[shat];
        }
        done += count;
        ++block;
    }

    Rational nn(static_cast<long>(config.trials));
    res.mean_distortion = sum_d / nn;
    res.mean_cost = sum_l / nn;
    auto se = [&](const Rational& sum2, const Rational& mean) {
        Rational var = sum2 / nn - mean * mean;
        double v = var.to_double();
        if (v < 0) v = 0;  // exact arithmetic: only at 0 via rounding
        return std::sqrt(v / static_cast<double>(config.trials));
    };
    res.se_distortion = se(sum_d2, res.mean_distortion);
    res.se_cost = se(sum_l2, res.mean_cost);
    return res;
}

}  // namespace semcom
