#pragma once

#include <optional>
#include <vector>

#include "icoh/classify.hpp"
#include "icoh/components.hpp"
#include "icoh/homology.hpp"
#include "icoh/nerve.hpp"
#include "icoh/oracle.hpp"

namespace icoh {

struct AnalysisOptions {
  int max_depth = 3;
  FieldKind field = FieldKind::rationals();
  NerveOptions nerve;       // dim_cap, budget, threads, vertex cap
  int pu_depth = 4;         // depth of the postunbranched check
  bool check_pu = true;     // run the geometric check (symbolic always passes)
  bool check_overlaps = true;
};

/// Everything the tower and classify commands report for one system.
struct Analysis {
  Tower tower;
  std::optional<PUReport> pu;
  EffectiveFacts facts;
  BettiTable table;
  ComponentTower components;
  std::optional<TheoremCheck> h1;        // best pivot; needs depth >= 2
  std::optional<TheoremCheck> puthm;     // only for postunbranched systems
  std::optional<std::vector<Overlap>> overlaps;  // geometric only
  std::optional<TheoremCheck> sscij1;    // only when every overlap is certified
};

/// Builds N_1..N_K (clamped to the stored depth for table systems) and runs
/// every applicable checker.
Analysis analyze(const Oracle& oracle, const AnalysisOptions& opt);

/// Tower depth actually used for a requested depth.
int effective_depth(const SystemSpec& spec, int requested);

}  // namespace icoh
