#include <doctest.h>

#include "common.hpp"
#include "icoh/errors.hpp"
#include "icoh/nerve.hpp"
#include "icoh/system.hpp"
#include "oracles.hpp"

using namespace icoh;

namespace {
const std::set<std::set<std::string>> kGasketN2Edges{
    {"11", "12"}, {"11", "13"}, {"12", "13"}, {"21", "22"}, {"21", "23"}, {"22", "23"},
    {"31", "32"}, {"31", "33"}, {"32", "33"}, {"12", "21"}, {"13", "31"}, {"23", "32"}};
}

TEST_CASE("build_nerve on the gasket") {
  const Oracle o(bundled("gasket"));
  const auto n1 = build_nerve(o, 1, {.dim_cap = 2});
  CHECK(word_sets(n1.complex, 1) == std::set<std::set<std::string>>{{"1", "2"}, {"2", "3"}, {"1", "3"}});
  CHECK(n1.complex.count(2) == 0);
  CHECK(n1.uncertain.empty());
  const auto n2 = build_nerve(o, 2, {.dim_cap = 2});
  CHECK(word_sets(n2.complex, 1) == kGasketN2Edges);
  CHECK(n2.complex.count(2) == 0);
}

TEST_CASE("build_nerve on the finite-set table") {
  const Oracle o(bundled("finset"));
  const auto n1 = build_nerve(o, 1, {.dim_cap = 2});
  CHECK(word_sets(n1.complex, 1) == std::set<std::set<std::string>>{{"1", "2"}, {"2", "3"}, {"1", "3"}});
  CHECK_THROWS_AS(build_nerve(o, 9, {.dim_cap = 2}), InputError);
}

TEST_CASE("threads give the same nerve") {
  const Oracle o(bundled("snowflake"));
  NerveOptions one{.dim_cap = 2};
  NerveOptions four{.dim_cap = 2};
  four.threads = 4;
  CHECK(build_nerve(o, 2, one).complex == build_nerve(o, 2, four).complex);
}

TEST_CASE("vertex cap") {
  const Oracle o(bundled("gasket"));
  NerveOptions opt{.dim_cap = 2};
  opt.vertex_cap = 20;
  CHECK_THROWS_AS(build_nerve(o, 3, opt), ResourceError);
}

TEST_CASE("truncation_map") {
  const Oracle o(bundled("gasket"));
  const auto t = build_tower(o, 2, {.dim_cap = 2});
  const auto phi = truncation_map(t.at(2), t.at(1));
  CHECK(phi.vertex_image[t.at(2).vertex_of(W(3, "12"))] == t.at(1).vertex_of(W(3, "1")));
  std::set<Simplex> images;
  for (const auto& e : t.at(2).simplices(1)) {
    const auto img = phi.image(e);
    if (img.size() == 2) images.insert(img);
  }
  CHECK(images.size() == 3);
  CHECK(is_simplicial(phi));
  CHECK(is_surjective_on_simplices(phi));
  CHECK_THROWS_AS(truncation_map(t.at(1), t.at(2)), InputError);
  CHECK_THROWS_AS(truncation_map(t.at(1), t.at(1)), InputError);
}

TEST_CASE("truncation_map rejects a non-simplicial pair") {
  const auto n1 = SimplicialComplex::from_simplices(2, 1, 2, {{0}, {1}});
  const auto n2 = SimplicialComplex::from_simplices(2, 2, 2, {{0, 3}});  // 11 -- 22
  CHECK_THROWS_AS(truncation_map(n2, n1), ConsistencyError);
}

TEST_CASE("block_subcomplex") {
  const Oracle o(bundled("gasket"));
  const auto t = build_tower(o, 2, {.dim_cap = 2});
  const auto b = block_subcomplex(t.at(2), W(3, "1"));
  CHECK(b.complex == t.at(1));
  REQUIRE(b.embedding.size() == 3);
  CHECK(t.at(2).vertex_word(b.embedding[1]) == W(3, "12"));
  CHECK_THROWS_AS(block_subcomplex(t.at(2), W(3, "12")), InputError);

  const auto spec = bundled("boundary_simplex_n2");
  const auto n1 = generate_pu_nerve(spec, 1, 3);
  const auto n2 = generate_pu_nerve(spec, 2, 3);
  CHECK(block_subcomplex(n2, W(4, "3")).complex == n1);
}

TEST_CASE("derived systems") {
  const auto gasket = bundled("gasket");
  const auto it = derive_iterate(gasket, 2);
  CHECK(it.m == 9);
  const Oracle oi(it), og(gasket);
  const auto n1 = build_nerve(oi, 1, {.dim_cap = 2}).complex;
  const auto n2 = build_nerve(og, 2, {.dim_cap = 2}).complex;
  // vertex i of the iterate is the i-th two-word of the gasket
  CHECK(n1.simplices(1) == n2.simplices(1));
  CHECK(n1.count(2) == n2.count(2));

  std::vector<Word> ws;
  for (const char* w : {"11", "13", "22", "23", "31", "32", "33"}) ws.push_back(W(3, w));
  const auto sub = derive_subsystem(gasket, ws);
  const auto& maps = sub.geometric().maps;
  const auto& h = gasket.geometric().maps;
  CHECK(maps[0] == compose(h[0], h[0]));
  CHECK(maps[1] == compose(h[0], h[2]));  // g_2 = h_1 o h_3
  CHECK_THROWS_AS(derive_subsystem(gasket, {W(3, "1"), W(3, "12")}), InputError);
}

TEST_CASE("SGsub7 and SGsubcal first-level nerves") {
  const auto sub7 = build_nerve(Oracle(bundled("sgsub7")), 1, {.dim_cap = 2}).complex;
  CHECK(word_sets(sub7, 1) == std::set<std::set<std::string>>{
                                  {"1", "2"}, {"3", "4"}, {"5", "6"}, {"6", "7"},
                                  {"5", "7"}, {"2", "5"}, {"4", "6"}});
  const auto cal = build_nerve(Oracle(bundled("sgsubcal")), 1, {.dim_cap = 2}).complex;
  CHECK(word_sets(cal, 1) == std::set<std::set<std::string>>{
                                 {"1", "2"}, {"2", "3"}, {"3", "4"}, {"5", "6"}, {"6", "7"}, {"5", "7"}});
  CHECK(ref::component_count(cal) == 2);
}

TEST_CASE("phi_k simplicial and onto on every bundled spec") {
  for (const char* name : {"gasket", "snowflake", "pentakun", "sgsub7", "sgsubcal", "notinjmu",
                           "finset", "fintriv", "fixed_point_table", "pbp_annuli",
                           "boundary_simplex_n0", "boundary_simplex_n1", "boundary_simplex_n2",
                           "boundary_simplex_n3", "boundary_simplex_n4", "two_map_cantor",
                           "interval_overlap", "gasket_symbolic"}) {
    CAPTURE(name);
    const auto spec = bundled(name);
    const int depth = spec.is_table() ? table_depth(spec) : (spec.m > 6 ? 2 : 3);
    const auto t = build_tower(Oracle(spec), depth, {.dim_cap = 2});
    for (int k = 1; k < t.depth(); ++k) {
      const auto phi = truncation_map(t.at(k + 1), t.at(k));
      CHECK(is_simplicial(phi));
      CHECK(is_surjective_on_simplices(phi));
    }
    if (ref::component_count(t.at(1)) == 1) {
      for (int k = 1; k <= t.depth(); ++k) CHECK(ref::component_count(t.at(k)) == 1);
    }
  }
}
