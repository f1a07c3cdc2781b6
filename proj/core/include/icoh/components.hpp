#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "icoh/complex.hpp"
#include "icoh/nerve.hpp"
#include "icoh/words.hpp"

namespace icoh {

/// Connected components of N_k with their parents in N_{k-1}.
struct ComponentLevel {
  std::size_t count = 0;
  std::vector<Word> representatives;  // lexicographically least word
  std::vector<std::size_t> sizes;     // vertices per component
  std::vector<std::size_t> parent;    // index into the previous level; empty at k = 1
};

enum class ConVerdictKind {
  Connected,
  FinitelyMany,
  CountablyInfinitePlus,
  Uncountable,
  InfinitelyMany,
  GrowingUnknown,
  NoVerdict,  // L_x connectivity not asserted: counts only
};
std::string to_string(ConVerdictKind k);

/// Verdict on Con(L), with the result licensing it.
struct ConVerdict {
  ConVerdictKind kind = ConVerdictKind::NoVerdict;
  std::size_t value = 0;             // FinitelyMany(n)
  std::string tag;
  std::string hypothesis;            // basis of "every L_x is connected"
  std::string note;
  std::optional<int> isolated_symbol;  // m = 3: j with L_{(j)^inf} a component

  std::string label() const;
};

/// Hypotheses the verdict rules depend on.
struct ComponentFacts {
  bool lx_connected = false;
  std::string lx_basis;
  bool injective_or_backward = false;
  bool postunbranched = false;
  bool backward = false;
};

struct ComponentTower {
  int m = 0;
  std::vector<ComponentLevel> levels;  // levels[k - 1]
  ConVerdict verdict;
  bool conditional = false;

  std::vector<std::size_t> counts() const;
};

/// Component forest along the tower plus the Con(L) verdict. Throws
/// ConsistencyError when counts decrease or a parent map is not surjective.
ComponentTower component_tower(const Tower& tower, const ComponentFacts& facts);

}  // namespace icoh
