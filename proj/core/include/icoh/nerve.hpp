#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "icoh/complex.hpp"
#include "icoh/oracle.hpp"

namespace icoh {

struct NerveOptions {
  /// Homology is wanted through this dimension; simplices are stored one
  /// dimension higher so that the top Betti number is exact.
  int dim_cap = 3;
  Budget budget;
  int threads = 1;
  std::uint64_t vertex_cap = kDefaultWordCap;

  void check() const;
};

/// A word tuple the oracle could not decide; excluded from the complex.
struct UncertainSimplex {
  std::vector<Word> words;
  std::string reason;
};

struct Nerve {
  SimplicialComplex complex;
  std::vector<UncertainSimplex> uncertain;
  std::size_t oracle_calls = 0;
};

/// N_k: pairwise oracle calls on envelope-overlapping pairs, then cliques
/// extended one dimension at a time and verified by one oracle call each.
/// Table systems must store level k (InputError otherwise).
Nerve build_nerve(const Oracle& oracle, int k, const NerveOptions& opt = {});

/// N_1, ..., N_K of one system.
struct Tower {
  std::vector<SimplicialComplex> levels;  // levels[k - 1] = N_k
  std::vector<UncertainSimplex> uncertain;
  std::size_t oracle_calls = 0;

  const SimplicialComplex& at(int k) const { return levels.at(static_cast<std::size_t>(k - 1)); }
  int depth() const { return static_cast<int>(levels.size()); }
  bool certain() const { return uncertain.empty(); }
};
Tower build_tower(const Oracle& oracle, int max_depth, const NerveOptions& opt = {});

}  // namespace icoh
