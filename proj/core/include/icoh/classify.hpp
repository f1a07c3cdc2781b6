#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icoh/complex.hpp"
#include "icoh/components.hpp"
#include "icoh/homology.hpp"
#include "icoh/oracle.hpp"

namespace icoh {

/// One condition or identity of a theorem, with the evidence.
struct Condition {
  std::string id;
  bool holds = false;
  std::string witness;
};

/// Conditions checked against a theorem; conclusions are only emitted when
/// every condition and hypothesis holds.
struct TheoremCheck {
  std::string theorem;
  std::vector<Condition> hypotheses;
  std::vector<Condition> conditions;
  std::vector<std::string> conclusions;

  bool all_hold() const;
  /// First failing condition or hypothesis, if any.
  const Condition* first_failure() const;
};

enum class PUKind { PostunbranchedUpTo, NotPostunbranched, Unknown };
std::string to_string(PUKind k);

/// Evidence for one ordered pair (i, j) with C_{i,j} possibly nonempty.
struct PUPair {
  int i = 0, j = 0;
  bool empty = false;
  std::optional<Point2> point;      // the single point of C_{i,j}
  std::optional<Point2> pulled;     // c_i^{-1}(point)
  std::vector<Word> prefixes;       // depth-D cells containing the pullback
  bool passes = false;
  std::string note;
};

struct PUReport {
  PUKind kind = PUKind::Unknown;
  int depth = 0;
  std::string basis;
  std::optional<std::pair<int, int>> witness;  // blocking or failing pair
  std::string witness_note;
  std::vector<PUPair> pairs;
};

/// Postunbranched up to depth D. Geometric systems: every nonempty C_{i,j}
/// must be certified to be a single point whose pullback lies in exactly one
/// depth-d cell for each d <= D. Symbolic systems pass by construction after
/// the address tables are re-validated to depth D. Table systems give Unknown.
PUReport check_postunbranched(const Oracle& oracle, int depth, const Budget& b = {});

enum class OverlapKind { EmptyCertified, SingletonCertified, Unknown };
std::string to_string(OverlapKind k);

struct Overlap {
  int i = 0, j = 0;  // i < j
  OverlapKind kind = OverlapKind::Unknown;
  std::optional<Point2> point;
  std::string note;
};

/// #C_{i,j} <= 1 per unordered pair, for geometric systems. A singleton is
/// certified when every surviving refinement region collapses exactly to the
/// intersection certificate's point.
std::vector<Overlap> check_singleton_overlaps(const Oracle& oracle, const Budget& b = {});
bool all_singleton(const std::vector<Overlap>& overlaps);

/// The four conditions of the H^1 = infinity theorem with the given pivot
/// symbol (in place of 1). `injective` is the extra hypothesis for forward
/// systems; backward systems pass it as true.
TheoremCheck check_h1_infinite_conditions(const SimplicialComplex& n1,
                                          const SimplicialComplex& n2, int pivot,
                                          bool backward, bool injective);

/// Recurrences and bounds for postunbranched systems, each checked on the
/// computed table; predictions are emitted as conclusions.
TheoremCheck verify_puthm(const BettiTable& table, int m, bool n1_connected);

/// betti_r = 0 for r >= 2 and m a_{1,k} <= a_{1,k+1} on every level.
TheoremCheck verify_sscij1(const BettiTable& table, int m);

/// Hypotheses in force for a system: facts asserted in the spec file, plus
/// what the tool discharges itself.
struct EffectiveFacts {
  bool backward = false;
  bool injective = false;
  std::string injective_basis;
  bool lx_connected = false;
  std::string lx_basis;
  bool postunbranched = false;
  std::string pu_basis;
  bool common_fixed_point = false;
  std::string cfp_basis;
};

/// pu may be null; then geometric systems are not treated as postunbranched
/// unless asserted.
EffectiveFacts effective_facts(const Oracle& oracle, const PUReport* pu);

ComponentFacts component_facts(const EffectiveFacts& f);

/// Tower facts including the H^1 = infinity conditions (checked on N_1, N_2
/// over every pivot).
TowerFacts tower_facts(const EffectiveFacts& f, const Tower& tower);

/// First pivot whose four conditions all hold, or the check for pivot 1.
TheoremCheck best_h1_check(const EffectiveFacts& f, const Tower& tower);

}  // namespace icoh
