#include "statcert/corpus.hpp"

#include "statcert/errors.hpp"

namespace statcert {

namespace {

// min -x1 s.t. -x1 + |x1|^(3/2) <= 0, -x2 <= 0, (x1-2x2)(x2-2x1) <= 0 at 0.
// The first constraint has no second derivative at the origin, so its
// Hessian entry is deliberately absent.
const char* const example2 = R"({
  "schema_version": 1,
  "name": "example2",
  "n": 2,
  "x": ["0", "0"],
  "objective": {"name": "f", "value": "0", "gradient": ["-1", "0"], "affine": true},
  "g": [
    {"name": "g1", "value": "0", "gradient": ["-1", "0"], "affine": false},
    {"name": "g2", "value": "0", "gradient": ["0", "-1"], "affine": true},
    {"name": "g3", "value": "0", "gradient": ["0", "0"],
     "hessian": [["-4", "5"], ["5", "-4"]], "affine": false}
  ],
  "symbolic": {
    "objective": {"terms": [{"coeff": "-1", "powers": [1, 0]}]},
    "g": [
      {"terms": [{"coeff": "-1", "powers": [1, 0]}], "abspow": {"var": 1, "coeff": "1"}},
      {"terms": [{"coeff": "-1", "powers": [0, 1]}]},
      {"terms": [{"coeff": "-2", "powers": [2, 0]}, {"coeff": "5", "powers": [1, 1]},
                 {"coeff": "-2", "powers": [0, 2]}]}
    ],
    "h": [], "G": [], "H": []
  }
})";

// min x1 + x2 - 2x3 s.t. -x1 - x3 <= 0, -x2 + x3 <= 0, (x1, x2) complementary.
const char* const example3 = R"({
  "schema_version": 1,
  "name": "example3",
  "n": 3,
  "x": ["0", "0", "0"],
  "objective": {"name": "f", "value": "0", "gradient": ["1", "1", "-2"], "affine": true},
  "g": [
    {"name": "g1", "value": "0", "gradient": ["-1", "0", "-1"], "affine": true},
    {"name": "g2", "value": "0", "gradient": ["0", "-1", "1"], "affine": true}
  ],
  "G": [{"name": "G1", "value": "0", "gradient": ["1", "0", "0"], "affine": true}],
  "H": [{"name": "H1", "value": "0", "gradient": ["0", "1", "0"], "affine": true}],
  "symbolic": {
    "objective": {"terms": [{"coeff": "1", "powers": [1, 0, 0]},
                            {"coeff": "1", "powers": [0, 1, 0]},
                            {"coeff": "-2", "powers": [0, 0, 1]}]},
    "g": [
      {"terms": [{"coeff": "-1", "powers": [1, 0, 0]}, {"coeff": "-1", "powers": [0, 0, 1]}]},
      {"terms": [{"coeff": "-1", "powers": [0, 1, 0]}, {"coeff": "1", "powers": [0, 0, 1]}]}
    ],
    "h": [],
    "G": [{"terms": [{"coeff": "1", "powers": [1, 0, 0]}]}],
    "H": [{"terms": [{"coeff": "1", "powers": [0, 1, 0]}]}]
  }
})";

// min -x1 + x2^2/2 s.t. a x1^2 - x2 <= 0, (x1, x2) complementary, at 0.
const char* const example4_a1 = R"({
  "schema_version": 1,
  "name": "example4_a1",
  "n": 2,
  "x": ["0", "0"],
  "objective": {"name": "f", "value": "0", "gradient": ["-1", "0"],
                "hessian": [["0", "0"], ["0", "1"]], "affine": false},
  "g": [
    {"name": "g1", "value": "0", "gradient": ["0", "-1"],
     "hessian": [["2", "0"], ["0", "0"]], "affine": false}
  ],
  "G": [{"name": "G1", "value": "0", "gradient": ["1", "0"], "affine": true}],
  "H": [{"name": "H1", "value": "0", "gradient": ["0", "1"], "affine": true}],
  "symbolic": {
    "objective": {"terms": [{"coeff": "-1", "powers": [1, 0]},
                            {"coeff": "1/2", "powers": [0, 2]}]},
    "g": [{"terms": [{"coeff": "1", "powers": [2, 0]}, {"coeff": "-1", "powers": [0, 1]}]}],
    "h": [],
    "G": [{"terms": [{"coeff": "1", "powers": [1, 0]}]}],
    "H": [{"terms": [{"coeff": "1", "powers": [0, 1]}]}]
  }
})";

const char* const example4_am1 = R"({
  "schema_version": 1,
  "name": "example4_am1",
  "n": 2,
  "x": ["0", "0"],
  "objective": {"name": "f", "value": "0", "gradient": ["-1", "0"],
                "hessian": [["0", "0"], ["0", "1"]], "affine": false},
  "g": [
    {"name": "g1", "value": "0", "gradient": ["0", "-1"],
     "hessian": [["-2", "0"], ["0", "0"]], "affine": false}
  ],
  "G": [{"name": "G1", "value": "0", "gradient": ["1", "0"], "affine": true}],
  "H": [{"name": "H1", "value": "0", "gradient": ["0", "1"], "affine": true}],
  "symbolic": {
    "objective": {"terms": [{"coeff": "-1", "powers": [1, 0]},
                            {"coeff": "1/2", "powers": [0, 2]}]},
    "g": [{"terms": [{"coeff": "-1", "powers": [2, 0]}, {"coeff": "-1", "powers": [0, 1]}]}],
    "h": [],
    "G": [{"terms": [{"coeff": "1", "powers": [1, 0]}]}],
    "H": [{"terms": [{"coeff": "1", "powers": [0, 1]}]}]
  }
})";

// The example3 program again, under the name the pivot walkthrough uses.
const char* const example5 = R"({
  "schema_version": 1,
  "name": "example5",
  "n": 3,
  "x": ["0", "0", "0"],
  "objective": {"name": "f", "value": "0", "gradient": ["1", "1", "-2"], "affine": true},
  "g": [
    {"name": "g1", "value": "0", "gradient": ["-1", "0", "-1"], "affine": true},
    {"name": "g2", "value": "0", "gradient": ["0", "-1", "1"], "affine": true}
  ],
  "G": [{"name": "G1", "value": "0", "gradient": ["1", "0", "0"], "affine": true}],
  "H": [{"name": "H1", "value": "0", "gradient": ["0", "1", "0"], "affine": true}],
  "symbolic": {
    "objective": {"terms": [{"coeff": "1", "powers": [1, 0, 0]},
                            {"coeff": "1", "powers": [0, 1, 0]},
                            {"coeff": "-2", "powers": [0, 0, 1]}]},
    "g": [
      {"terms": [{"coeff": "-1", "powers": [1, 0, 0]}, {"coeff": "-1", "powers": [0, 0, 1]}]},
      {"terms": [{"coeff": "-1", "powers": [0, 1, 0]}, {"coeff": "1", "powers": [0, 0, 1]}]}
    ],
    "h": [],
    "G": [{"terms": [{"coeff": "1", "powers": [1, 0, 0]}]}],
    "H": [{"terms": [{"coeff": "1", "powers": [0, 1, 0]}]}]
  }
})";

// min x1 + x2 - x3 s.t. -4x1 + x3 <= 0, -4x2 + x3 <= 0, (x1, x2) complementary.
const char* const example6 = R"({
  "schema_version": 1,
  "name": "example6",
  "n": 3,
  "x": ["0", "0", "0"],
  "objective": {"name": "f", "value": "0", "gradient": ["1", "1", "-1"], "affine": true},
  "g": [
    {"name": "g1", "value": "0", "gradient": ["-4", "0", "1"], "affine": true},
    {"name": "g2", "value": "0", "gradient": ["0", "-4", "1"], "affine": true}
  ],
  "G": [{"name": "G1", "value": "0", "gradient": ["1", "0", "0"], "affine": true}],
  "H": [{"name": "H1", "value": "0", "gradient": ["0", "1", "0"], "affine": true}],
  "symbolic": {
    "objective": {"terms": [{"coeff": "1", "powers": [1, 0, 0]},
                            {"coeff": "1", "powers": [0, 1, 0]},
                            {"coeff": "-1", "powers": [0, 0, 1]}]},
    "g": [
      {"terms": [{"coeff": "-4", "powers": [1, 0, 0]}, {"coeff": "1", "powers": [0, 0, 1]}]},
      {"terms": [{"coeff": "-4", "powers": [0, 1, 0]}, {"coeff": "1", "powers": [0, 0, 1]}]}
    ],
    "h": [],
    "G": [{"terms": [{"coeff": "1", "powers": [1, 0, 0]}]}],
    "H": [{"terms": [{"coeff": "1", "powers": [0, 1, 0]}]}]
  }
})";

// min -x1 + x1^2 + x2^2 s.t. (x1, x2) complementary: the strong
// second-order condition holds at 0 yet the origin is not a minimizer.
const char* const remark2 = R"({
  "schema_version": 1,
  "name": "remark2",
  "n": 2,
  "x": ["0", "0"],
  "objective": {"name": "f", "value": "0", "gradient": ["-1", "0"],
                "hessian": [["2", "0"], ["0", "2"]], "affine": false},
  "G": [{"name": "G1", "value": "0", "gradient": ["1", "0"], "affine": true}],
  "H": [{"name": "H1", "value": "0", "gradient": ["0", "1"], "affine": true}],
  "symbolic": {
    "objective": {"terms": [{"coeff": "-1", "powers": [1, 0]},
                            {"coeff": "1", "powers": [2, 0]},
                            {"coeff": "1", "powers": [0, 2]}]},
    "g": [], "h": [],
    "G": [{"terms": [{"coeff": "1", "powers": [1, 0]}]}],
    "H": [{"terms": [{"coeff": "1", "powers": [0, 1]}]}]
  }
})";

// min -x1 s.t. (x1, x2) complementary: M-stationary, not strongly so.
const char* const m_not_strong_m = R"({
  "schema_version": 1,
  "name": "m_not_strong_m",
  "n": 2,
  "x": ["0", "0"],
  "objective": {"name": "f", "value": "0", "gradient": ["-1", "0"], "affine": true},
  "G": [{"name": "G1", "value": "0", "gradient": ["1", "0"], "affine": true}],
  "H": [{"name": "H1", "value": "0", "gradient": ["0", "1"], "affine": true}],
  "symbolic": {
    "objective": {"terms": [{"coeff": "-1", "powers": [1, 0]}]},
    "g": [], "h": [],
    "G": [{"terms": [{"coeff": "1", "powers": [1, 0]}]}],
    "H": [{"terms": [{"coeff": "1", "powers": [0, 1]}]}]
  }
})";

}  // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = {
        {"example2", example2},
        {"example3", example3},
        {"example4_a1", example4_a1},
        {"example4_am1", example4_am1},
        {"example5", example5},
        {"example6", example6},
        {"remark2", remark2},
        {"m_not_strong_m", m_not_strong_m},
    };
    return entries;
}

Problem corpus_problem(const std::string& name) {
    for (const CorpusEntry& e : corpus())
        if (e.name == name) return parse_problem(e.json_text);
    throw InputError("unknown corpus problem: " + name);
}

}  // namespace statcert
