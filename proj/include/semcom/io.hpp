#pragma once
// Model files, built-in example generators and plot-data export.
//
// A model file is a JSON document with exact-rational strings ("a/b" or an
// integer string) everywhere a number appears; decimal literals are
// rejected so no precision is lost on the way in:
//
//   {
//     "meanings":  [{"label": "A", "p": "1/3", "q": "1/2"}, ...],
//     "messages":  [{"label": "UU", "cost": "2"}, ...],
//     "expression":     [["1/9", ...], ...],   N rows of M entries
//     "interpretation": [["1/3", ...], ...],   M rows of N entries
//     "channel":    "error-free" | M x M matrix,
//     "distortion": "hamming"    | N x N matrix
//   }
//
// "q" defaults to "p" per meaning; "channel" and "distortion" default to
// "error-free" and "hamming".

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "semcom/csed.hpp"
#include "semcom/decoding.hpp"
#include "semcom/region.hpp"
#include "semcom/types.hpp"

namespace semcom {

struct Model {
    SemanticLanguage language;
    SemanticChannel channel;
    CostFunction cost;
    DistortionMeasure distortion;
};

struct SpecParseError : std::runtime_error {
    SpecParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg), line(line), col(col) {}
    int line;
    int col;
};

struct SpecValidationError : std::runtime_error {
    explicit SpecValidationError(std::vector<std::string> problems);
    std::vector<std::string> issues;
};

// Parse and fully validate a model document. Throws SpecParseError with
// line/column on malformed input, SpecValidationError on invariant
// violations.
Model parse_model(const std::string& text);
Model load_model(const std::string& path);

// Canonical serialization; parse(serialize(m)) reproduces m exactly.
std::string serialize_model(const Model& model);
void save_model(const Model& model, const std::string& path);

// Square grid walked from the origin with "up"/"right" words; meanings are
// destination cells, messages are move sequences priced by their encoded
// bit length. Interpretation counts trajectory prefixes; expression is
// uniform over each meaning's admissible messages. Fully equivalent
// terminal messages (same cost, same interpretation, no legitimate
// extension) collapse into one.
struct GridWorldParams {
    int side = 3;
    std::vector<std::pair<int, int>> destinations = {{1, 2}, {2, 2}};
    std::vector<std::string> labels = {"A", "B"};
    Rational up_cost = Rational(1);     // word "up" encodes as one bit
    Rational right_cost = Rational(2);  // word "right" encodes as two bits
    std::vector<Rational> tx_prior = {Rational(1, 3), Rational(2, 3)};
    std::vector<Rational> rx_prior = {Rational(1, 2), Rational(1, 2)};
};

Model generate_gridworld(const GridWorldParams& params = {});

// Two meanings, two equally priced gestures, and a language whose
// expression and interpretation are exact opposites of each other.
Model generate_nodshake();

// CSV rendering (header L_exact,D_exact,L_float,D_float,scheme; floats at
// 12 significant digits).
std::string frontier_csv(const RegionFrontier& frontier,
                         const SemanticLanguage& lang);
std::string decoding_csv(const DecodingRegion& region);
std::string csed_csv(const CsedRegion& region);
void write_file(const std::string& path, const std::string& content);

}  // namespace semcom
