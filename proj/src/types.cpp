#include "semcom/types.hpp"

#include <stdexcept>

namespace semcom {

Rational Mat::row_sum(int r) const {
    Rational s;
    for (int c = 0; c < cols_; ++c) s += at(r, c);
    return s;
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Rational CostFunction::min() const {
    if (costs.empty()) throw std::invalid_argument("cost: empty");
    return costs.front();  // costs are sorted nondecreasing
}

Rational CostFunction::max() const {
    if (costs.empty()) throw std::invalid_argument("cost: empty");
    return costs.back();
}

DistortionMeasure DistortionMeasure::hamming(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) m.at(i, j) = 1;
    return {m};
}

bool DistortionMeasure::is_hamming() const {
    return matrix == hamming(matrix.rows()).matrix;
}

bool DistortionMeasure::is_symmetric() const {
    for (int i = 0; i < matrix.rows(); ++i)
        for (int j = i + 1; j < matrix.cols(); ++j)
            if (matrix.at(i, j) != matrix.at(j, i)) return false;
    return true;
}

EncodingScheme EncodingScheme::from_indices(const std::vector<int>& idx, int m) {
    EncodingScheme u;
    u.matrix = Mat(static_cast<int>(idx.size()), m);
    for (int w = 0; w < static_cast<int>(idx.size()); ++w) {
        if (idx[w] < 0 || idx[w] >= m)
            throw std::invalid_argument("encoding scheme: message index out of range");
        u.matrix.at(w, idx[w]) = 1;
    }
    u.deterministic = idx;
    return u;
}

DecodingScheme DecodingScheme::from_indices(const std::vector<int>& idx, int n) {
    DecodingScheme v;
    v.matrix = Mat(static_cast<int>(idx.size()), n);
    for (int s = 0; s < static_cast<int>(idx.size()); ++s) {
        if (idx[s] < 0 || idx[s] >= n)
            throw std::invalid_argument("decoding scheme: meaning index out of range");
        v.matrix.at(s, idx[s]) = 1;
    }
    v.deterministic = idx;
    return v;
}

namespace {

void check_stochastic_rows(const Mat& m, const std::string& what,
                           const std::vector<std::string>& row_labels,
                           std::vector<std::string>& issues) {
    for (int r = 0; r < m.rows(); ++r) {
        bool range_ok = true;
        for (int c = 0; c < m.cols(); ++c) {
            const Rational& x = m.at(r, c);
            if (x.is_negative() || x > Rational(1)) range_ok = false;
        }
        if (!range_ok) {
            issues.push_back(what + " row '" + row_labels[r] +
                             "' has an entry outside [0,1]");
        }
        if (m.row_sum(r) != Rational(1)) {
            issues.push_back(what + " row '" + row_labels[r] +
                             "' sums to " + m.row_sum(r).str() + ", not 1");
        }
    }
}

void check_prior(const std::vector<Rational>& p, const std::string& what,
                 std::vector<std::string>& issues) {
    Rational s;
    for (const auto& x : p) {
        if (x.is_negative() || x > Rational(1)) {
            issues.push_back(what + " has an entry outside [0,1]");
            break;
        }
    }
    for (const auto& x : p) s += x;
    if (s != Rational(1))
        issues.push_back(what + " sums to " + s.str() + ", not 1");
}

}  // namespace

ValidationReport validate_language(const SemanticLanguage& lang) {
    ValidationReport rep;
    const int n = lang.num_meanings();
    const int m = lang.num_messages();
    if (n == 0) rep.issues.push_back("language has no meanings");
    if (m == 0) rep.issues.push_back("language has no messages");
    if (lang.expression.rows() != n || lang.expression.cols() != m) {
        rep.issues.push_back("expression matrix is not N x M");
        return rep;
    }
    if (lang.interpretation.rows() != m || lang.interpretation.cols() != n) {
        rep.issues.push_back("interpretation matrix is not M x N");
        return rep;
    }
    if (static_cast<int>(lang.tx_prior.size()) != n ||
        static_cast<int>(lang.rx_prior.size()) != n) {
        rep.issues.push_back("prior length does not match meaning count");
        return rep;
    }
    check_stochastic_rows(lang.expression, "expression", lang.meanings, rep.issues);
    check_stochastic_rows(lang.interpretation, "interpretation", lang.messages,
                          rep.issues);
    check_prior(lang.tx_prior, "transmitter prior", rep.issues);
    check_prior(lang.rx_prior, "receiver prior", rep.issues);
    return rep;
}

ValidationReport validate_model(const SemanticLanguage& lang,
                                const SemanticChannel& channel,
                                const CostFunction& cost,
                                const DistortionMeasure& distortion) {
    ValidationReport rep = validate_language(lang);
    const int n = lang.num_meanings();
    const int m = lang.num_messages();

    if (channel.kernel.rows() != m || channel.kernel.cols() != m) {
        rep.issues.push_back("channel kernel is not M x M");
    } else {
        check_stochastic_rows(channel.kernel, "channel", lang.messages, rep.issues);
    }

    if (static_cast<int>(cost.costs.size()) != m) {
        rep.issues.push_back("cost vector length does not match message count");
    } else {
        for (int i = 0; i < m; ++i) {
            if (cost.costs[i].is_negative()) {
                rep.issues.push_back("cost of message '" + lang.messages[i] +
                                     "' is negative");
            }
            if (i > 0 && cost.costs[i] < cost.costs[i - 1]) {
                rep.issues.push_back("messages are not sorted by cost at '" +
                                     lang.messages[i] + "'");
            }
        }
    }

    if (distortion.matrix.rows() != n || distortion.matrix.cols() != n) {
        rep.issues.push_back("distortion matrix is not N x N");
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (distortion.matrix.at(i, j).is_negative()) {
                    rep.issues.push_back("distortion d(" + lang.meanings[i] + "," +
                                         lang.meanings[j] + ") is negative");
                }
    }
    return rep;
}

}  // namespace semcom
