#include <doctest.h>

#include "common.hpp"
#include "icoh/errors.hpp"
#include "icoh/homology.hpp"
#include "icoh/nerve.hpp"
#include "oracles.hpp"

using namespace icoh;

namespace {
const FieldKind kQ = FieldKind::rationals();
const FieldKind kGF2 = FieldKind::gf(2);
const FieldKind kGF3 = FieldKind::gf(3);

BettiTable table_for(const char* name, int depth, int dim_cap = 2, TowerFacts facts = {}) {
  const auto t = build_tower(Oracle(bundled(name)), depth, {.dim_cap = dim_cap});
  return tower_analysis(t, kQ, dim_cap, facts);
}
}  // namespace

TEST_CASE("field parsing") {
  CHECK(FieldKind::parse("q").rational);
  CHECK(FieldKind::parse("gf2").p == 2);
  CHECK(FieldKind::parse("gfp:7").p == 7);
  CHECK(FieldKind::parse("gfp:7").name() == "GF(7)");
  CHECK_THROWS_AS(FieldKind::parse("gfp:8"), InputError);
  CHECK_THROWS_AS(FieldKind::parse("r"), InputError);
}

TEST_CASE("betti on small complexes") {
  const auto tri = SimplicialComplex::from_simplices(3, 1, 3, {{0, 1, 2}});
  for (const auto& f : {kQ, kGF2, kGF3}) {
    CHECK(betti(tri, f, 0) == 1);
    CHECK(betti(tri, f, 1) == 0);
    CHECK(betti(tri, f, 2) == 0);
  }
  const auto circle = SimplicialComplex::from_simplices(3, 1, 2, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(betti(circle, kQ, 1) == 1);
  CHECK_THROWS_AS(betti(circle, kQ, 2), InputError);
  // projective plane: H_1 = Z/2, visible over GF(2) only
  const std::vector<Simplex> rp2{{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
                                 {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}};
  const auto p = SimplicialComplex::from_simplices(6, 1, 3, rp2);
  CHECK(betti(p, kQ, 1) == 0);
  CHECK(betti(p, kGF2, 1) == 1);
  CHECK(betti(p, kGF2, 2) == 1);
  CHECK(betti(p, kGF3, 2) == 0);
  CHECK(ref::betti_mod_p(p, 1, 2) == 1);
}

TEST_CASE("betti agrees with the dense reference") {
  for (const char* name : {"gasket", "snowflake", "notinjmu", "boundary_simplex_n2",
                           "pbp_annuli", "sgsubcal"}) {
    CAPTURE(name);
    const auto t = build_tower(Oracle(bundled(name)), 2, {.dim_cap = 2});
    for (int k = 1; k <= 2; ++k) {
      for (int r = 0; r <= 2; ++r) {
        CHECK(betti(t.at(k), kQ, r) == ref::betti_mod_p(t.at(k), r, 1000003));
        CHECK(betti(t.at(k), kGF2, r) == ref::betti_mod_p(t.at(k), r, 2));
        CHECK(betti(t.at(k), kGF2, r) == betti(t.at(k), kQ, r));
      }
      CHECK(euler_check(t.at(k), kQ).holds());
      CHECK(euler_check(t.at(k), kGF2).holds());
    }
  }
}

TEST_CASE("gasket betti numbers") {
  const auto t = build_tower(Oracle(bundled("gasket")), 2, {.dim_cap = 2});
  CHECK(betti(t.at(1), kQ, 1) == 1);
  CHECK(betti(t.at(1), kGF2, 1) == 1);
  CHECK(betti(t.at(2), kQ, 1) == 4);
}

TEST_CASE("induced ranks") {
  const auto gt = build_tower(Oracle(bundled("gasket")), 3, {.dim_cap = 2});
  const auto phi = truncation_map(gt.at(2), gt.at(1));
  CHECK(induced_rank(phi, 1, kQ) == 1);
  CHECK(induced_rank_cohomology(phi, 1, kQ) == 1);
  CHECK(ref::induced_rank_mod_p(phi, 1, 1000003) == 1);
  const auto phi31 = compose(truncation_map(gt.at(2), gt.at(1)), truncation_map(gt.at(3), gt.at(2)));
  CHECK(induced_rank(phi31, 1, kQ) == 1);

  const auto nt = build_tower(Oracle(bundled("notinjmu")), 2, {.dim_cap = 2});
  const auto psi = truncation_map(nt.at(2), nt.at(1));
  CHECK(induced_rank(psi, 1, kQ) == 0);
  CHECK(induced_rank_cohomology(psi, 1, kQ) == 0);
  CHECK(ref::induced_rank_mod_p(psi, 1, 2) == 0);

  SimplicialMap id{&gt.at(1), &gt.at(1), {0, 1, 2}};
  CHECK(induced_rank(id, 1, kQ) == betti(gt.at(1), kQ, 1));
  CHECK(induced_rank(id, 0, kGF2) == 1);
}

TEST_CASE("homology and cohomology ranks agree on every level") {
  for (const char* name : {"gasket", "snowflake", "notinjmu", "sgsubcal", "boundary_simplex_n2",
                           "pbp_annuli", "two_map_cantor"}) {
    CAPTURE(name);
    const auto t = build_tower(Oracle(bundled(name)), 2, {.dim_cap = 2});
    const auto phi = truncation_map(t.at(2), t.at(1));
    for (int r = 0; r <= 1; ++r) {
      for (const auto& f : {kQ, kGF2}) {
        const auto h = induced_rank(phi, r, f);
        CHECK(h == induced_rank_cohomology(phi, r, f));
        CHECK(h == ref::induced_rank_mod_p(phi, r, f.rational ? 1000003 : f.p));
      }
    }
  }
}

TEST_CASE("tower_analysis: gasket") {
  TowerFacts facts;
  facts.postunbranched = true;
  facts.injective_or_backward = true;
  const auto t = table_for("gasket", 4, 2, facts);
  CHECK(t.a[0][1] == 1);
  CHECK(t.a[1][1] == 4);
  CHECK(t.a[2][1] == 13);
  CHECK(t.a[3][1] == 40);
  CHECK_FALSE(t.lambda[0].has_value());
  CHECK(*t.lambda[1] == 1);
  CHECK(t.limits[1].kind == LimitKind::Infinite);
  CHECK(t.limits[0].kind == LimitKind::Finite);
  CHECK(t.limits[0].value == 1);
  CHECK(*t.b1_estimate == 1);
}

TEST_CASE("tower_analysis: common fixed point") {
  TowerFacts facts;
  facts.common_fixed_point = true;
  const auto t = table_for("fixed_point_table", 4, 2, facts);
  for (int k = 1; k <= 4; ++k) {
    CHECK(t.at(0, k) == 1);
    CHECK(t.at(1, k) == 0);
    CHECK(t.at(2, k) == 0);
  }
  CHECK(t.limits[0].kind == LimitKind::Finite);
  CHECK(t.limits[0].value == 1);
  CHECK(t.limits[1].kind == LimitKind::Finite);
  CHECK(t.limits[1].value == 0);
}

TEST_CASE("tower_analysis: snowflake and pentakun") {
  const auto s = table_for("snowflake", 3);
  CHECK(s.at(1, 1) == 6);
  CHECK(s.at(1, 2) == 48);
  CHECK(s.at(1, 3) == 342);
  const auto p = table_for("pentakun", 3);
  CHECK(p.at(1, 1) == 1);
  CHECK(p.at(1, 2) == 6);
  CHECK(p.at(1, 3) == 31);
}

TEST_CASE("tower_analysis: finite set examples") {
  const auto fs = table_for("finset", 3);
  const auto ft = table_for("fintriv", 3);
  for (int k = 1; k <= 3; ++k) {
    CHECK(fs.at(0, k) == 1);
    CHECK(ft.at(0, k) == 3);  // three singleton cells, never touching
    CHECK(ft.at(1, k) == 0);
    CHECK(ft.at(2, k) == 0);
  }
  CHECK(fs.at(1, 1) == 1);
}

TEST_CASE("uncertain simplices make the report conditional") {
  const Oracle o(load_spec(std::string(ICOH_TEST_DATA) + "/flip_interval.json"));
  NerveOptions starved{.dim_cap = 2};
  starved.budget.cert_period_max = 1;
  const auto t = build_tower(o, 2, starved);
  CHECK_FALSE(t.certain());
  CHECK(tower_analysis(t, kQ, 2, {}).conditional);
  const auto full = build_tower(o, 2, {.dim_cap = 2});
  CHECK(full.certain());
  CHECK_FALSE(tower_analysis(full, kQ, 2, {}).conditional);
  CHECK(full.at(2).count(1) == 3);
}
