#include <doctest.h>

#include "common.hpp"
#include "icoh/analysis.hpp"
#include "icoh/errors.hpp"
#include "icoh/io.hpp"
#include "icoh/nerve.hpp"

using namespace icoh;

TEST_CASE("spec parsing errors") {
  CHECK_THROWS_AS(parse_spec("{"), InputError);
  CHECK_THROWS_AS(parse_spec(R"({"name":"x","orientation":"forward","m":1})"), InputError);
  CHECK_THROWS_AS(load_spec("/nonexistent/spec.json"), InputError);
  // floats are rejected
  CHECK_THROWS_AS(parse_spec(R"({"name":"x","orientation":"forward","m":1,"backend":{"kind":"geometric",
      "maps":[{"matrix":[[0.5,"0"],["0","1/2"]],"translation":["0","0"]}],
      "envelope":[["0","0"],["1","0"],["0","1"]]}})"),
                  InputError);
  // not a contraction
  CHECK_THROWS_AS(parse_spec(R"({"name":"x","orientation":"forward","m":1,"backend":{"kind":"geometric",
      "maps":[{"matrix":[["1","0"],["0","1"]],"translation":["1","0"]}],
      "envelope":[["0","0"],["1","0"],["0","1"]]}})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_spec(R"({"name":"x","orientation":"sideways","m":1,"backend":{"kind":"table","levels":{"1":[["1"]]}}})"),
                  InputError);
}

TEST_CASE("spec round trip") {
  for (const char* name : {"gasket", "pentakun", "pbp_annuli", "sgsub7", "boundary_simplex_n2"}) {
    CAPTURE(name);
    const auto spec = bundled(name);
    const auto text = spec_to_json(spec);
    const auto again = parse_spec(text);
    CHECK(spec_to_json(again) == text);
  }
  const auto it = derive_iterate(bundled("gasket"), 2);
  CHECK_NOTHROW(parse_spec(spec_to_json(it)));
}

TEST_CASE("nerve exports") {
  const auto n = build_nerve(Oracle(bundled("gasket")), 1, {.dim_cap = 2});
  const auto dot = nerve_to_dot("gasket", n.complex);
  CHECK(dot.find("graph \"gasket_N1\"") == 0);
  std::size_t edges = 0, pos = 0;
  while ((pos = dot.find(" -- ", pos)) != std::string::npos) ++edges, ++pos;
  CHECK(edges == 3);
  const auto json = nerve_to_json("gasket", n.complex, n.uncertain);
  CHECK(json == nerve_to_json("gasket", build_nerve(Oracle(bundled("gasket")), 1, {.dim_cap = 2}).complex, {}));
  CHECK(json.find("\"uncertain\"") != std::string::npos);
}

TEST_CASE("betti csv") {
  AnalysisOptions opt;
  opt.max_depth = 3;
  opt.nerve.dim_cap = 2;
  const auto a = analyze(Oracle(bundled("gasket")), opt);
  const auto csv = betti_csv(a.table);
  CHECK(csv ==
        "k,a_0,a_1,a_2,lambda_k,components\n"
        "1,1,1,0,,1\n"
        "2,1,4,0,1,1\n"
        "3,1,13,0,1,1\n");
  const auto v = verdicts_json("gasket", a.table, a.components, a.facts, a.tower.uncertain);
  CHECK(v.find("puthm7c") != std::string::npos);
  CHECK(v.find("-inf") != std::string::npos);
}
