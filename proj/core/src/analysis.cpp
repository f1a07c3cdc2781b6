#include "icoh/analysis.hpp"

#include <algorithm>

#include "icoh/errors.hpp"

namespace icoh {

int effective_depth(const SystemSpec& spec, int requested) {
  if (requested < 1) throw InputError("depth must be >= 1");
  return spec.is_table() ? std::min(requested, table_depth(spec)) : requested;
}

Analysis analyze(const Oracle& oracle, const AnalysisOptions& opt) {
  const auto& spec = oracle.spec();
  Analysis a;
  a.tower = build_tower(oracle, effective_depth(spec, opt.max_depth), opt.nerve);
  if (spec.is_symbolic() || (spec.is_geometric() && opt.check_pu)) {
    a.pu = check_postunbranched(oracle, opt.pu_depth, opt.nerve.budget);
  }
  a.facts = effective_facts(oracle, a.pu ? &*a.pu : nullptr);
  const TowerFacts tf = tower_facts(a.facts, a.tower);
  a.table = tower_analysis(a.tower, opt.field, opt.nerve.dim_cap, tf);
  a.components = component_tower(a.tower, component_facts(a.facts));
  if (a.tower.depth() >= 2) a.h1 = best_h1_check(a.facts, a.tower);
  if (a.facts.postunbranched && a.tower.depth() >= 2) {
    a.puthm = verify_puthm(a.table, spec.m, a.table.at(0, 1) == 1);
  }
  if (spec.is_geometric() && opt.check_overlaps) {
    a.overlaps = check_singleton_overlaps(oracle, opt.nerve.budget);
    if (all_singleton(*a.overlaps) && a.facts.injective) a.sscij1 = verify_sscij1(a.table, spec.m);
  }
  return a;
}

}  // namespace icoh
