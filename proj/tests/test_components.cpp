#include <doctest.h>

#include "common.hpp"
#include "icoh/classify.hpp"
#include "icoh/components.hpp"
#include "icoh/errors.hpp"
#include "icoh/nerve.hpp"
#include "oracles.hpp"

using namespace icoh;

namespace {
ComponentTower tower_of(const char* name, int depth) {
  const Oracle o(bundled(name));
  const auto pu = check_postunbranched(o, 4);
  const auto facts = effective_facts(o, &pu);
  return component_tower(build_tower(o, depth, {.dim_cap = 2}), component_facts(facts));
}
}  // namespace

TEST_CASE("connected_components") {
  const auto edgeless = SimplicialComplex(5, 1, 2);
  CHECK(connected_components(edgeless).count == 5);
  const auto cal = build_nerve(Oracle(bundled("sgsubcal")), 1, {.dim_cap = 2}).complex;
  const auto c = connected_components(cal);
  CHECK(c.count == 2);
  CHECK(c.label[0] == c.label[3]);
  CHECK(c.label[4] == c.label[6]);
  CHECK(c.label[0] != c.label[4]);
  const auto g = build_tower(Oracle(bundled("gasket")), 4, {.dim_cap = 2});
  for (int k = 1; k <= 4; ++k) CHECK(connected_components(g.at(k)).count == 1);
}

TEST_CASE("component tower: gasket is connected") {
  const auto ct = tower_of("gasket", 3);
  CHECK(ct.counts() == std::vector<std::size_t>{1, 1, 1});
  CHECK(ct.verdict.kind == ConVerdictKind::Connected);
}

TEST_CASE("component tower: two disjoint maps") {
  const auto ct = tower_of("two_map_cantor", 4);
  CHECK(ct.counts() == std::vector<std::size_t>{2, 4, 8, 16});
  CHECK(ct.verdict.kind == ConVerdictKind::Uncountable);
  CHECK(ct.verdict.label() == "Uncountable(Sigma_2)");
  // full binary forest: every component has exactly two children
  for (std::size_t k = 1; k < ct.levels.size(); ++k) {
    std::vector<int> children(ct.levels[k - 1].count, 0);
    for (auto p : ct.levels[k].parent) ++children[p];
    for (int c : children) CHECK(c == 2);
  }
}

TEST_CASE("component tower: SGsubcal grows") {
  const auto ct = tower_of("sgsubcal", 3);
  const auto c = ct.counts();
  CHECK(c[0] < c[1]);
  CHECK(c[1] < c[2]);
  CHECK(ct.verdict.kind == ConVerdictKind::InfinitelyMany);
  CHECK(ct.verdict.label() == "infinitely many components");
}

TEST_CASE("component tower without the L_x hypothesis gives counts only") {
  const auto ct = tower_of("finset", 3);
  CHECK(ct.verdict.kind == ConVerdictKind::NoVerdict);
}

TEST_CASE("component counts match union-find") {
  for (const char* name : {"notinjmu", "sgsubcal", "two_map_cantor", "interval_overlap"}) {
    CAPTURE(name);
    const auto t = build_tower(Oracle(bundled(name)), 3, {.dim_cap = 2});
    const auto ct = component_tower(t, {});
    for (int k = 1; k <= 3; ++k) {
      CHECK(ct.levels[static_cast<std::size_t>(k - 1)].count == ref::component_count(t.at(k)));
      if (k > 1) CHECK(ct.levels[static_cast<std::size_t>(k - 1)].count >= ct.levels[static_cast<std::size_t>(k - 2)].count);
    }
  }
}

TEST_CASE("inconsistent tower is reported") {
  Tower t;
  t.levels.push_back(SimplicialComplex::from_simplices(2, 1, 2, {{0}, {1}}));
  t.levels.push_back(SimplicialComplex::from_simplices(2, 2, 2, {{0, 3}}));
  CHECK_THROWS_AS(component_tower(t, {}), ConsistencyError);
}
