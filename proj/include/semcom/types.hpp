#pragma once
// Domain model: semantic language, channel, cost, distortion and the two
// kinds of schemes. All types are immutable-by-convention after
// construction; every operation on them elsewhere in the library is a pure
// function.

#include <optional>
#include <string>
#include <vector>

#include "semcom/rational.hpp"

namespace semcom {

// Dense row-major matrix of exact rationals.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return a_[r * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[r * cols_ + c]; }

    Rational row_sum(int r) const;
    static Mat identity(int n);
    bool operator==(const Mat& o) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

// The agreed language: meanings, cost-ordered messages, expression rows
// p(s|w) (N x M), interpretation rows q(w|s) stored per message (M x N),
// and the two priors. The receiver prior may differ from the transmitter's.
struct SemanticLanguage {
    std::vector<std::string> meanings;
    std::vector<std::string> messages;
    Mat expression;      // N x M, row w: p(s|w)
    Mat interpretation;  // M x N, row s: q(w|s)
    std::vector<Rational> tx_prior;  // p(w)
    std::vector<Rational> rx_prior;  // q(w)

    int num_meanings() const { return static_cast<int>(meanings.size()); }
    int num_messages() const { return static_cast<int>(messages.size()); }
};

// Message-to-message transition kernel c(shat|s); abstracts the whole
// technical layer. Error-free iff the kernel is the identity.
struct SemanticChannel {
    Mat kernel;  // M x M

    static SemanticChannel error_free(int m) { return {Mat::identity(m)}; }
    bool is_error_free() const { return kernel == Mat::identity(kernel.rows()); }
};

struct CostFunction {
    std::vector<Rational> costs;  // nonnegative, nondecreasing

    Rational min() const;
    Rational max() const;
};

struct DistortionMeasure {
    Mat matrix;  // N x N, d(w, what) >= 0

    static DistortionMeasure hamming(int n);
    bool is_hamming() const;
    bool is_symmetric() const;
};

// Row-stochastic map W -> S; deterministic schemes carry the per-meaning
// message index vector alongside the matrix.
struct EncodingScheme {
    Mat matrix;  // N x M, row w: u(s|w)
    std::optional<std::vector<int>> deterministic;

    static EncodingScheme from_indices(const std::vector<int>& idx, int m);
};

// Per-message distribution over meanings v(w|s).
struct DecodingScheme {
    Mat matrix;  // M x N, row s: v(w|s)
    std::optional<std::vector<int>> deterministic;

    static DecodingScheme from_indices(const std::vector<int>& idx, int n);
};

struct DistortionCostPoint {
    Rational cost;
    Rational distortion;
    std::string provenance;  // achieving scheme(s), mixture weights if any
};

struct ValidationReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
};

// Invariant checks for a full model: stochastic rows, normalized priors,
// sorted nonnegative costs, consistent dimensions. Diagnostics are the
// return value; nothing throws.
ValidationReport validate_language(const SemanticLanguage& lang);
ValidationReport validate_model(const SemanticLanguage& lang,
                                const SemanticChannel& channel,
                                const CostFunction& cost,
                                const DistortionMeasure& distortion);

}  // namespace semcom
