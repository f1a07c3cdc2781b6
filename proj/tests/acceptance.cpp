// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "common.hpp"
#include "icoh/analysis.hpp"
#include "icoh/errors.hpp"
#include "oracles.hpp"

using namespace icoh;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<std::size_t> column(const BettiTable& t, int r) {
  std::vector<std::size_t> out;
  for (int k = 1; k <= t.depth(); ++k) out.push_back(t.at(r, k));
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Analysis run(const SystemSpec& spec, int depth, int dim_cap, FieldKind f = FieldKind::rationals(),
             int pu_depth = 4) {
  AnalysisOptions opt;
  opt.max_depth = depth;
  opt.field = f;
  opt.nerve.dim_cap = dim_cap;
  opt.pu_depth = pu_depth;
  return analyze(Oracle(spec), opt);
}

void c1(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& f : {FieldKind::rationals(), FieldKind::gf(2)}) {
    const auto a = run(bundled("gasket"), 5, 2, f);
    const auto a1 = column(a.table, 1);
    o.detail << f.name() << " a_1=" << join(a1) << "; ";
    o.require(a1 == std::vector<std::size_t>{1, 4, 13, 40, 121}, "a_1 over " + f.name());
    o.require(column(a.table, 2) == std::vector<std::size_t>(5, 0), "a_2 = 0 over " + f.name());
    o.require(a.table.components == std::vector<std::size_t>(5, 1), "components = 1");
    o.require(a.tower.certain(), "no uncertain simplices");
  }
  const double s = seconds_since(t0);
  o.detail << "time " << s << "s";
  o.require(s < 60, "runtime < 60 s");
}

void c2(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto a = run(bundled("snowflake"), 3, 2);
  const auto a1 = column(a.table, 1);
  const double s = seconds_since(t0);
  o.detail << "a_1=" << join(a1) << "; time " << s << "s";
  o.require(a1 == std::vector<std::size_t>{6, 48, 342}, "a_1");
  o.require(a.tower.certain(), "no uncertain simplices");
  o.require(s < 120, "runtime < 120 s");
}

void c3(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto a = run(bundled("pentakun"), 4, 2);
  const auto a1 = column(a.table, 1);
  const double s = seconds_since(t0);
  o.detail << "a_1=" << join(a1) << "; time " << s << "s";
  o.require(a1 == std::vector<std::size_t>{1, 6, 31, 156}, "a_1");
  o.require(s < 10, "runtime < 10 s");
}

void c4(Outcome& o) {
  std::vector<Word> ws;
  for (const char* w : {"11", "13", "22", "23", "31", "32", "33"}) ws.push_back(W(3, w));
  auto spec = derive_subsystem(bundled("gasket"), ws);
  spec.name = "sgsub7";
  o.require(spec_to_json(spec) == spec_to_json(bundled("sgsub7")), "bundled sgsub7.json matches derive");
  const auto a = run(spec, 3, 2);
  const std::set<std::set<std::string>> edges{{"1", "2"}, {"3", "4"}, {"5", "6"}, {"6", "7"},
                                              {"5", "7"}, {"2", "5"}, {"4", "6"}};
  o.require(word_sets(a.tower.at(1), 1) == edges, "N_1 edge set");
  const auto a1 = column(a.table, 1);
  o.detail << "N_1 edges=" << a.tower.at(1).count(1) << " a_1=" << join(a1);
  o.require(a1 == std::vector<std::size_t>{1, 8, 57}, "a_1");
}

void c5(Outcome& o) {
  std::vector<Word> ws;
  for (const char* w : {"11", "12", "21", "22", "31", "32", "33"}) ws.push_back(W(3, w));
  auto spec = derive_subsystem(bundled("gasket"), ws);
  spec.name = "sgsubcal";
  o.require(spec_to_json(spec) == spec_to_json(bundled("sgsubcal")), "bundled sgsubcal.json matches derive");
  const auto a = run(spec, 3, 2);
  const auto c = a.components.counts();
  o.detail << "components=" << join(c) << " verdict=\"" << a.components.verdict.label()
           << "\" a_{1,1}=" << a.table.at(1, 1);
  o.require(c.size() == 3 && c[0] < c[1] && c[1] < c[2], "strictly increasing counts");
  o.require(a.components.verdict.label() == "infinitely many components", "verdict");
  o.require(a.table.at(1, 1) == 1, "a_{1,1} = 1");
}

void c6(Outcome& o) {
  const Oracle oracle(bundled("notinjmu"));
  const auto pu = check_postunbranched(oracle, 5);
  o.require(pu.kind == PUKind::PostunbranchedUpTo && pu.depth == 5, "postunbranched up to 5");
  const auto t = build_tower(oracle, 2, {.dim_cap = 2});
  const auto b1 = betti(t.at(1), FieldKind::rationals(), 1);
  const auto lambda2 = induced_rank(truncation_map(t.at(2), t.at(1)), 1, FieldKind::rationals());
  o.require(b1 >= 1, "betti(N_1, 1) >= 1");
  o.require(lambda2 == 0, "induced rank of phi_{2,1} on H_1 is 0");
  const auto a = run(oracle.spec(), 3, 2, FieldKind::rationals(), 5);
  bool predicted = false;
  if (a.puthm) {
    for (const auto& c : a.puthm->conclusions) predicted |= c.find("H^1 = 0") != std::string::npos;
  }
  o.require(predicted, "verify_puthm predicts H^1 = 0");
  o.detail << "PU(" << pu.depth << ") b_1(N_1)=" << b1 << " lambda_2=" << lambda2
           << " prediction=" << (predicted ? "H^1 = 0" : "none");
}

void c7(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int n : {2, 3}) {
    const auto a = run(bundled("boundary_simplex_n" + std::to_string(n)), 3, n);
    const auto an = column(a.table, n);
    o.detail << "n=" << n << " a_n=" << join(an) << " verdict " << to_string(a.table.limits[n].kind)
             << "[" << a.table.limits[n].tag << "]; ";
    o.require(an[0] == 1, "a_{n,1} = 1");
    for (std::size_t k = 0; k + 1 < an.size(); ++k)
      o.require(an[k + 1] == static_cast<std::size_t>(n + 2) * an[k] + 1, "recurrence");
    o.require(a.table.limits[n].kind == LimitKind::Infinite && a.table.limits[n].tag == "puthmcohsupp",
              "Infinite via puthmcohsupp");
  }
  const double s = seconds_since(t0);
  o.detail << "time " << s << "s";
  o.require(s < 30, "runtime < 30 s");
}

void c8(Outcome& o) {
  const auto gt = build_tower(Oracle(bundled("gasket")), 5, {.dim_cap = 2});
  const auto g = check_h1_infinite_conditions(gt.at(1), gt.at(2), 1, false, true);
  const auto pt = build_tower(Oracle(bundled("pbp_annuli")), 2, {.dim_cap = 2});
  const auto p = check_h1_infinite_conditions(pt.at(1), pt.at(2), 1, true, true);
  auto infinite = [](const TheoremCheck& t) {
    for (const auto& c : t.conclusions)
      if (c.find("H^1 = infinity") != std::string::npos) return true;
    return false;
  };
  o.require(g.all_hold() && g.conditions.size() == 4 && infinite(g), "gasket pivot 1");
  o.require(p.all_hold() && p.conditions.size() == 4 && infinite(p), "pbp-annuli pivot 1");
  std::vector<std::size_t> a1;
  for (int k = 1; k <= 5; ++k) a1.push_back(betti(gt.at(k), FieldKind::rationals(), 1));
  bool increasing = true;
  for (std::size_t k = 0; k + 1 < a1.size(); ++k) increasing &= a1[k] < a1[k + 1];
  o.require(increasing, "gasket a_1 strictly increasing");
  o.detail << g.theorem << " " << (g.all_hold() ? "4/4" : "fail") << ", " << p.theorem << " "
           << (p.all_hold() ? "4/4" : "fail") << ", gasket a_1=" << join(a1);
}

void c9(Outcome& o) {
  const std::vector<std::string> names{
      "gasket", "snowflake", "pentakun", "sgsub7", "sgsubcal", "notinjmu", "finset", "fintriv",
      "fixed_point_table", "pbp_annuli", "boundary_simplex_n0", "boundary_simplex_n1",
      "boundary_simplex_n2", "boundary_simplex_n3", "boundary_simplex_n4", "two_map_cantor",
      "interval_overlap", "gasket_symbolic"};
  std::size_t complexes = 0, maps = 0, singleton_systems = 0;
  for (const auto& name : names) {
    const auto spec = bundled(name);
    const Oracle oracle(spec);
    const int depth = spec.is_table() ? table_depth(spec) : (spec.m > 5 ? 2 : 3);
    const int dim_cap = spec.is_geometric() ? 2 : 4;
    const auto t = build_tower(oracle, depth, {.dim_cap = dim_cap});
    const bool n1_connected = ref::component_count(t.at(1)) == 1;
    for (int k = 1; k <= t.depth(); ++k) {
      ++complexes;
      if (n1_connected) o.require(ref::component_count(t.at(k)) == 1, name + ": N_1 connected => N_k connected");
      for (const auto& f : {FieldKind::rationals(), FieldKind::gf(2), FieldKind::gf(3)}) {
        const auto e = euler_check(t.at(k), f);
        o.require(e.holds(), name + ": Euler identity");
      }
      if (k == 1) continue;
      const auto phi = truncation_map(t.at(k), t.at(k - 1));
      o.require(is_simplicial(phi) && is_surjective_on_simplices(phi), name + ": phi simplicial and onto");
      for (int r = 0; r <= 1; ++r) {
        ++maps;
        for (const auto& f : {FieldKind::rationals(), FieldKind::gf(2)}) {
          o.require(induced_rank(phi, r, f) == induced_rank_cohomology(phi, r, f),
                    name + ": homology vs cohomology induced rank");
        }
      }
    }
    if (spec.is_geometric()) {
      // budget monotonicity on all pairs of depth-2 words
      Budget small;
      small.refine_depth = 2;
      small.cert_period_max = 1;
      Budget large;
      large.refine_depth = 10;
      large.cert_period_max = 3;
      large.cert_preperiod_max = 2;
      const auto ws = enumerate_words(spec.m, spec.m > 5 ? 1 : 2);
      for (std::size_t i = 0; i < ws.size(); ++i) {
        for (std::size_t j = i + 1; j < ws.size(); ++j) {
          const auto a = oracle.cells_intersect({ws[i], ws[j]}, small);
          const auto b = oracle.cells_intersect({ws[i], ws[j]}, large);
          o.require(a.kind == VerdictKind::Unknown || a.kind == b.kind, name + ": verdict monotonicity");
        }
      }
      if (all_singleton(check_singleton_overlaps(oracle))) {
        ++singleton_systems;
        const auto table = tower_analysis(t, FieldKind::rationals(), dim_cap, {});
        o.require(verify_sscij1(table, spec.m).all_hold(), name + ": sscij1 bounds");
      }
    }
  }
  const Oracle geo(bundled("gasket")), sym(bundled("gasket_symbolic"));
  const auto tg = build_tower(geo, 4, {.dim_cap = 2});
  const auto ts = build_tower(sym, 4, {.dim_cap = 2});
  for (int k = 1; k <= 4; ++k) o.require(tg.at(k) == ts.at(k), "gasket geometric == symbolic at k=" + std::to_string(k));
  o.detail << names.size() << " specs, " << complexes << " complexes, " << maps
           << " induced maps, " << singleton_systems << " certified-singleton systems";
}

void c10(Outcome& o) {
  const auto a = run(bundled("two_map_cantor"), 4, 2);
  const auto c = a.components.counts();
  o.detail << "components=" << join(c) << " verdict=" << a.components.verdict.label() << " ["
           << a.components.verdict.tag << "]";
  o.require(c == std::vector<std::size_t>{2, 4, 8, 16}, "counts 2,4,8,16");
  o.require(a.components.verdict.kind == ConVerdictKind::Uncountable, "Uncountable verdict");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"gasket tower K=5 over Q and GF(2)", c1},
      {"snowflake tower K=3", c2},
      {"pentakun tower K=4", c3},
      {"SGsub7 derived from the gasket", c4},
      {"SGsubcal derived from the gasket", c5},
      {"notinjmu postunbranched with B_2 = 0", c6},
      {"boundary-simplex family n=2,3", c7},
      {"H^1 = infinity condition checker", c8},
      {"property suites on every bundled spec", c9},
      {"two-map disjoint system", c10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first
              << " -- " << o.detail.str() << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
