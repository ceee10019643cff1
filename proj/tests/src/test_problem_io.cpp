#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "helpers.hpp"
#include "statcert/errors.hpp"
#include "statcert/oracle.hpp"
#include "statcert/problem.hpp"

using namespace statcert;
using namespace statcert::testing;

namespace {

std::string replace_first(std::string text, const std::string& from, const std::string& to) {
  const std::size_t at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

const char* const tiny_json = R"({
  "schema_version": 1,
  "name": "tiny",
  "n": 1,
  "x": ["0"],
  "objective": {"name": "f", "value": "0", "gradient": ["1"], "affine": true},
  "g": [{"name": "g1", "value": "0", "gradient": ["-1"], "affine": true}]
})";

const char* const bad_pair_json = R"({
  "schema_version": 1,
  "name": "bad",
  "n": 1,
  "x": ["0"],
  "objective": {"name": "f", "value": "0", "gradient": ["1"], "affine": true},
  "G": [{"name": "G1", "value": "-1", "gradient": ["1"], "affine": true}],
  "H": [{"name": "H1", "value": "1", "gradient": ["0"], "affine": true}]
})";

}  // namespace

TEST_CASE("corpus fixtures parse and round trip") {
  REQUIRE(corpus().size() == 8);
  for (const CorpusEntry& entry : corpus()) {
    const Problem p = parse_problem(entry.json_text);
    CHECK(p.name == entry.name);
    const std::string once = serialize_problem(p);
    CHECK(!once.empty());
    CHECK(once.back() == '\n');
    const Problem back = parse_problem(once);
    CHECK(serialize_problem(back) == once);
    CHECK(back.point.n == p.point.n);
  }
  CHECK_THROWS_AS((void)corpus_problem("no_such_fixture"), InputError);
}

TEST_CASE("minimal problem and diagnostics") {
  const Problem p = parse_problem(tiny_json);
  CHECK(p.point.n == 1);
  CHECK(!p.symbolic);

  try {
    (void)parse_problem(bad_pair_json);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("G_i(x) >= 0 violated at i = 1") !=
          std::string::npos);
  }
}

TEST_CASE("parse rejections") {
  std::string base;
  for (const CorpusEntry& entry : corpus())
    if (entry.name == "example3") base = entry.json_text;
  REQUIRE(!base.empty());

  CHECK_THROWS_AS(
      (void)parse_problem(replace_first(base, "\"schema_version\": 1", "\"schema_version\": 2")),
      InputError);
  // rationals must be canonical on the wire
  CHECK_THROWS_AS(
      (void)parse_problem(replace_first(base, "\"value\": \"0\"", "\"value\": \"0/3\"")),
      InputError);
  // monomial powers must match the ambient dimension
  CHECK_THROWS_AS(
      (void)parse_problem(replace_first(base, "\"powers\": [1, 0, 0]", "\"powers\": [1, 0]")),
      InputError);
  // the frozen gradient must agree with the symbolic block at the point
  CHECK_THROWS_AS(
      (void)parse_problem(replace_first(base, "\"gradient\": [\"1\", \"1\", \"-2\"]",
                                        "\"gradient\": [\"1\", \"1\", \"-3\"]")),
      InputError);
  CHECK_THROWS_AS((void)parse_problem("{not json"), InputError);
}

TEST_CASE("symbolic evaluation decides signs exactly") {
  const Problem ex2 = corpus_problem("example2");
  CHECK(symbolic_feasible(ex2, vecq({"1/8", "0"})));
  CHECK(symbolic_descent(ex2, vecq({"1/8", "0"})));
  CHECK(!symbolic_feasible(ex2, vecq({"-1/8", "0"})));
  // |x1|^(3/2) rational at 1/4 and 4, irrational at 1/2 and 2
  CHECK(symbolic_feasible(ex2, vecq({"1/4", "0"})));
  CHECK(!symbolic_feasible(ex2, vecq({"4", "0"})));
  CHECK(symbolic_feasible(ex2, vecq({"1/2", "0"})));
  CHECK(!symbolic_feasible(ex2, vecq({"2", "0"})));

  const SymbolicFunction& g1 = ex2.symbolic->g[0];
  const std::optional<Rational> rat = symbolic_value(g1, vecq({"1/4", "0"}));
  REQUIRE(rat);
  CHECK(*rat == Rational(-1, 8));
  CHECK(!symbolic_value(g1, vecq({"1/2", "0"})));
}

TEST_CASE("grid oracle findings") {
  {
    const OracleResult r = grid_oracle(corpus_problem("example3"), 1, 8);
    REQUIRE(r.found);
    CHECK(vec_equal(r.x, vecq({"0", "1/8", "1/8"})));
    REQUIRE(r.f_value);
    CHECK(*r.f_value == Rational(-1, 8));
  }
  {
    const OracleResult r = grid_oracle(corpus_problem("example4_a1"), Rational(1, 2), 8);
    CHECK(!r.found);
  }
  {
    const OracleResult r = grid_oracle(corpus_problem("example4_am1"), Rational(1, 2), 8);
    REQUIRE(r.found);
    CHECK(r.x[1] == Rational(0));
    CHECK(sign(r.x[0]) > 0);
    CHECK(sign(*r.f_value) < 0);
  }
  {
    const OracleResult r = grid_oracle(corpus_problem("example2"), 1, 8);
    REQUIRE(r.found);
    CHECK(vec_equal(r.x, vecq({"1/8", "0"})));
    CHECK(*r.f_value == Rational(-1, 8));
  }
}

TEST_CASE("oracle input validation") {
  Problem bare;
  bare.point = parse_problem(tiny_json).point;
  CHECK_THROWS_AS((void)grid_oracle(bare, 1, 4), UnavailableError);

  const Problem ex3 = corpus_problem("example3");
  CHECK_THROWS_AS((void)grid_oracle(ex3, 0, 4), InputError);
  CHECK_THROWS_AS((void)grid_oracle(ex3, -1, 4), InputError);
  CHECK_THROWS_AS((void)grid_oracle(ex3, 1, 0), InputError);
}

TEST_CASE("directional probe") {
  const Problem am1 = corpus_problem("example4_am1");
  const OracleResult hit = probe_direction(am1, vec({1, 0}), 1, 4);
  REQUIRE(hit.found);
  CHECK(vec_equal(hit.x, vecq({"1/4", "0"})));
  CHECK(sign(*hit.f_value) < 0);

  const Problem a1 = corpus_problem("example4_a1");
  const OracleResult miss = probe_direction(a1, vec({1, 0}), Rational(1, 2), 4);
  CHECK(!miss.found);
}
