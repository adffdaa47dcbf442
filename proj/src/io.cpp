#include "semcom/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace semcom {

namespace {

using Json = nlohmann::ordered_json;

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Rational json_rational(const Json& v, const std::string& where) {
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw SpecParseError(std::string(e.what()) + " at " + where, 0, 0);
        }
    }
    if (v.is_number_integer())
        return Rational(static_cast<long>(v.get<long long>()));
    if (v.is_number_float())
        throw SpecParseError("decimal literals are not accepted at " + where +
                                 "; use an exact \"a/b\" string",
                             0, 0);
    throw SpecParseError("expected a rational at " + where, 0, 0);
}

Mat json_matrix(const Json& v, int rows, int cols, const std::string& where) {
    if (!v.is_array() || static_cast<int>(v.size()) != rows)
        throw SpecParseError(where + " must be an array of " +
                                 std::to_string(rows) + " rows",
                             0, 0);
    Mat m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const Json& row = v[r];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw SpecParseError(where + " row " + std::to_string(r) +
                                     " must have " + std::to_string(cols) +
                                     " entries",
                                 0, 0);
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = json_rational(row[c], where + "[" + std::to_string(r) +
                                                   "][" + std::to_string(c) + "]");
    }
    return m;
}

Json matrix_json(const Mat& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string csv_float(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", r.to_double());
    return buf;
}

std::string pipe_label(const std::vector<int>& scheme,
                       const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t i = 0; i < scheme.size(); ++i) {
        if (i) out += "|";
        out += labels[scheme[i]];
    }
    return out;
}

}  // namespace

SpecValidationError::SpecValidationError(std::vector<std::string> problems)
    : std::runtime_error("model failed validation: " +
                         [&problems] {
                             std::string s;
                             for (const auto& p : problems) {
                                 if (!s.empty()) s += "; ";
                                 s += p;
                             }
                             return s;
                         }()),
      issues(std::move(problems)) {}

Model parse_model(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw SpecParseError(e.what(), line, col);
    }

    Model model;
    auto& lang = model.language;
    if (!doc.contains("meanings") || !doc["meanings"].is_array() ||
        doc["meanings"].empty())
        throw SpecParseError("missing or empty 'meanings' section", 0, 0);
    if (!doc.contains("messages") || !doc["messages"].is_array() ||
        doc["messages"].empty())
        throw SpecParseError("missing or empty 'messages' section", 0, 0);

    for (const auto& entry : doc["meanings"]) {
        if (!entry.contains("label") || !entry.contains("p"))
            throw SpecParseError("each meaning needs 'label' and 'p'", 0, 0);
        lang.meanings.push_back(entry["label"].get<std::string>());
        Rational p = json_rational(entry["p"], "meanings.p");
        lang.tx_prior.push_back(p);
        lang.rx_prior.push_back(
            entry.contains("q") ? json_rational(entry["q"], "meanings.q") : p);
    }
    for (const auto& entry : doc["messages"]) {
        if (!entry.contains("label") || !entry.contains("cost"))
            throw SpecParseError("each message needs 'label' and 'cost'", 0, 0);
        lang.messages.push_back(entry["label"].get<std::string>());
        model.cost.costs.push_back(json_rational(entry["cost"], "messages.cost"));
    }
    for (const auto& list : {lang.meanings, lang.messages}) {
        std::vector<std::string> sorted = list;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw SpecParseError("duplicate label", 0, 0);
    }

    const int n = lang.num_meanings();
    const int m = lang.num_messages();
    if (!doc.contains("expression"))
        throw SpecParseError("missing 'expression' section", 0, 0);
    if (!doc.contains("interpretation"))
        throw SpecParseError("missing 'interpretation' section", 0, 0);
    lang.expression = json_matrix(doc["expression"], n, m, "expression");
    lang.interpretation = json_matrix(doc["interpretation"], m, n, "interpretation");

    if (!doc.contains("channel") || (doc["channel"].is_string() &&
                                     doc["channel"] == "error-free")) {
        model.channel = SemanticChannel::error_free(m);
    } else {
        model.channel.kernel = json_matrix(doc["channel"], m, m, "channel");
    }
    if (!doc.contains("distortion") || (doc["distortion"].is_string() &&
                                        doc["distortion"] == "hamming")) {
        model.distortion = DistortionMeasure::hamming(n);
    } else {
        model.distortion.matrix = json_matrix(doc["distortion"], n, n, "distortion");
    }

    ValidationReport rep =
        validate_model(model.language, model.channel, model.cost, model.distortion);
    if (!rep.ok()) throw SpecValidationError(rep.issues);
    return model;
}

Model load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str());
}

std::string serialize_model(const Model& model) {
    const auto& lang = model.language;
    Json doc;
    doc["meanings"] = Json::array();
    for (int w = 0; w < lang.num_meanings(); ++w) {
        Json entry;
        entry["label"] = lang.meanings[w];
        entry["p"] = lang.tx_prior[w].str();
        entry["q"] = lang.rx_prior[w].str();
        doc["meanings"].push_back(std::move(entry));
    }
    doc["messages"] = Json::array();
    for (int s = 0; s < lang.num_messages(); ++s) {
        Json entry;
        entry["label"] = lang.messages[s];
        entry["cost"] = model.cost.costs[s].str();
        doc["messages"].push_back(std::move(entry));
    }
    doc["expression"] = matrix_json(lang.expression);
    doc["interpretation"] = matrix_json(lang.interpretation);
    if (model.channel.is_error_free()) {
        doc["channel"] = "error-free";
    } else {
        doc["channel"] = matrix_json(model.channel.kernel);
    }
    if (model.distortion.is_hamming()) {
        doc["distortion"] = "hamming";
    } else {
        doc["distortion"] = matrix_json(model.distortion.matrix);
    }
    return doc.dump(2) + "\n";
}

void save_model(const Model& model, const std::string& path) {
    write_file(path, serialize_model(model));
}

Model generate_gridworld(const GridWorldParams& params) {
    const int n = static_cast<int>(params.destinations.size());
    if (n == 0) throw std::invalid_argument("grid world needs a destination");
    if (static_cast<int>(params.labels.size()) != n ||
        static_cast<int>(params.tx_prior.size()) != n ||
        static_cast<int>(params.rx_prior.size()) != n)
        throw std::invalid_argument("grid world parameter lengths disagree");

    int max_moves = 0;
    for (auto [x, y] : params.destinations) {
        if (x < 0 || y < 0 || x >= params.side || y >= params.side)
            throw std::invalid_argument("destination outside the grid");
        max_moves = std::max(max_moves, x + y);
    }

    // All words up to the longest trajectory, by length then with "up"
    // ordered before "right". 'U' = up, 'R' = right.
    std::vector<std::string> words = {""};
    for (std::size_t head = 0; head < words.size(); ++head) {
        if (static_cast<int>(words[head].size()) >= max_moves) continue;
        words.push_back(words[head] + "U");
        words.push_back(words[head] + "R");
    }
    std::stable_sort(words.begin(), words.end(),
                     [](const std::string& a, const std::string& b) {
                         return a.size() < b.size();
                     });

    auto word_cost = [&](const std::string& w) {
        Rational c;
        for (char ch : w) c += (ch == 'U') ? params.up_cost : params.right_cost;
        return c;
    };
    auto is_prefix = [](const std::string& p, const std::string& w) {
        return p.size() <= w.size() && w.compare(0, p.size(), p) == 0;
    };

    // Complete trajectories per destination: y ups and x rights in any order.
    std::vector<std::vector<std::string>> trajectories(n);
    for (int d = 0; d < n; ++d) {
        auto [x, y] = params.destinations[d];
        for (const auto& w : words) {
            if (static_cast<int>(w.size()) != x + y) continue;
            int ups = static_cast<int>(std::count(w.begin(), w.end(), 'U'));
            if (ups == y) trajectories[d].push_back(w);
        }
    }

    // Prefix counts drive the interpretation; a message is legitimate when
    // it prefixes at least one complete trajectory.
    struct Msg {
        std::string word;
        Rational cost;
        std::vector<long> counts;
        long total = 0;
    };
    std::vector<Msg> legit;
    for (const auto& w : words) {
        Msg msg{w, word_cost(w), std::vector<long>(n, 0), 0};
        for (int d = 0; d < n; ++d)
            for (const auto& t : trajectories[d])
                if (is_prefix(w, t)) ++msg.counts[d], ++msg.total;
        if (msg.total > 0) legit.push_back(std::move(msg));
    }

    // Terminal messages (no legitimate proper extension) that share a cost
    // and an interpretation row are interchangeable; collapse each class
    // onto its first member.
    auto q_row = [&](const Msg& msg) {
        std::vector<Rational> row(n);
        for (int d = 0; d < n; ++d)
            row[d] = Rational(msg.counts[d], msg.total);
        return row;
    };
    std::vector<bool> terminal(legit.size(), true);
    for (std::size_t i = 0; i < legit.size(); ++i)
        for (std::size_t j = 0; j < legit.size(); ++j)
            if (i != j && is_prefix(legit[i].word, legit[j].word))
                terminal[i] = false;
    std::vector<int> group(legit.size());
    for (std::size_t i = 0; i < legit.size(); ++i) {
        group[i] = static_cast<int>(i);
        if (!terminal[i]) continue;
        for (std::size_t j = 0; j < i; ++j) {
            if (!terminal[j] || group[j] != static_cast<int>(j)) continue;
            if (legit[j].cost == legit[i].cost && q_row(legit[j]) == q_row(legit[i])) {
                group[i] = static_cast<int>(j);
                break;
            }
        }
    }

    std::vector<int> reps;
    std::vector<int> class_size(legit.size(), 0);
    for (std::size_t i = 0; i < legit.size(); ++i) {
        ++class_size[group[i]];
        if (group[i] == static_cast<int>(i)) reps.push_back(static_cast<int>(i));
    }
    std::stable_sort(reps.begin(), reps.end(), [&](int a, int b) {
        return legit[a].cost < legit[b].cost;
    });

    const int m = static_cast<int>(reps.size());
    Model model;
    auto& lang = model.language;
    lang.meanings = params.labels;
    lang.tx_prior = params.tx_prior;
    lang.rx_prior = params.rx_prior;
    lang.interpretation = Mat(m, n);
    lang.expression = Mat(n, m);
    model.cost.costs.resize(m);

    // Admissible message count per meaning, over the unmerged set.
    std::vector<long> admissible(n, 0);
    for (const auto& msg : legit)
        for (int d = 0; d < n; ++d)
            if (msg.counts[d] > 0) ++admissible[d];

    for (int s = 0; s < m; ++s) {
        const Msg& rep = legit[reps[s]];
        lang.messages.push_back(rep.word.empty() ? "∅" : rep.word);
        model.cost.costs[s] = rep.cost;
        auto row = q_row(rep);
        for (int d = 0; d < n; ++d) lang.interpretation.at(s, d) = row[d];
        // Each merged member contributes one uniform share.
        for (int d = 0; d < n; ++d) {
            if (rep.counts[d] > 0)
                lang.expression.at(d, s) =
                    Rational(class_size[reps[s]], admissible[d]);
        }
    }

    model.channel = SemanticChannel::error_free(m);
    model.distortion = DistortionMeasure::hamming(n);

    ValidationReport rep =
        validate_model(lang, model.channel, model.cost, model.distortion);
    if (!rep.ok()) throw SpecValidationError(rep.issues);
    return model;
}

Model generate_nodshake() {
    Model model;
    auto& lang = model.language;
    lang.meanings = {"yes", "no"};
    lang.messages = {"nod", "shake"};
    lang.tx_prior = {Rational(1, 2), Rational(1, 2)};
    lang.rx_prior = {Rational(1, 2), Rational(1, 2)};
    lang.expression = Mat(2, 2);
    lang.expression.at(0, 0) = 1;  // yes -> nod
    lang.expression.at(1, 1) = 1;  // no  -> shake
    lang.interpretation = Mat(2, 2);
    lang.interpretation.at(0, 1) = 1;  // nod   -> no
    lang.interpretation.at(1, 0) = 1;  // shake -> yes
    model.cost.costs = {Rational(1), Rational(1)};
    model.channel = SemanticChannel::error_free(2);
    model.distortion = DistortionMeasure::hamming(2);
    return model;
}

std::string frontier_csv(const RegionFrontier& frontier,
                         const SemanticLanguage& lang) {
    std::string out = "L_exact,D_exact,L_float,D_float,scheme\n";
    auto emit = [&](const FrontierPoint& p, const char* chain) {
        out += p.cost.str() + "," + p.distortion.str() + "," +
               csv_float(p.cost) + "," + csv_float(p.distortion) + "," +
               chain + "[" + pipe_label(p.encoder, lang.messages) + "]\n";
    };
    for (const auto& p : frontier.lower) emit(p, "lower");
    for (const auto& p : frontier.upper) emit(p, "upper");
    return out;
}

std::string decoding_csv(const DecodingRegion& region) {
    std::string out = "L_exact,D_exact,L_float,D_float,scheme\n";
    auto emit = [&](const Rational& d, const char* which) {
        out += region.cost.str() + "," + d.str() + "," + csv_float(region.cost) +
               "," + csv_float(d) + "," + which + "\n";
    };
    emit(region.d_min, "dec[best]");
    emit(region.d_max, "dec[worst]");
    return out;
}

std::string csed_csv(const CsedRegion& region) {
    std::string out = "L_exact,D_exact,L_float,D_float,scheme\n";
    auto provenance = [&](const Point2& p) -> std::string {
        for (const auto& g : region.generators) {
            if (g.cost == p.x && g.distortion == p.y) {
                std::string label = g.provenance;
                std::replace(label.begin(), label.end(), ',', '|');
                return label;
            }
        }
        return "hull";
    };
    auto emit = [&](const Point2& p, const char* chain) {
        out += p.x.str() + "," + p.y.str() + "," + csv_float(p.x) + "," +
               csv_float(p.y) + "," + chain + provenance(p) + "\n";
    };
    for (const auto& p : region.lower) emit(p, "csed-lower");
    for (const auto& p : region.upper) emit(p, "csed-upper");
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    if (path.empty()) throw std::runtime_error("empty output path");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace semcom
