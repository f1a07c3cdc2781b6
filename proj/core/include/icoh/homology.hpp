#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icoh/complex.hpp"
#include "icoh/nerve.hpp"

namespace icoh {

/// Coefficient field: the rationals or GF(p).
struct FieldKind {
  bool rational = true;
  std::int64_t p = 0;

  static FieldKind rationals() { return {true, 0}; }
  /// Throws InputError unless p is a prime below 2^31.
  static FieldKind gf(std::int64_t p);
  /// "q", "gf2", "gfp:7".
  static FieldKind parse(const std::string& text);
  std::string name() const;
};

/// Rank of the boundary map C_r -> C_{r-1} (0 for r = 0).
std::size_t boundary_rank(const SimplicialComplex& c, const FieldKind& f, int r);

/// dim H_r = n_r - rank d_r - rank d_{r+1}. Needs r < c.max_dim() so that
/// the (r+1)-simplices are stored; throws InputError otherwise.
std::size_t betti(const SimplicialComplex& c, const FieldKind& f, int r);

/// Rank of f_* on H_r, via cycles of the source pushed into the target and
/// taken modulo target boundaries. Degenerate simplices map to 0.
std::size_t induced_rank(const SimplicialMap& map, int r, const FieldKind& f);

/// Same rank computed on cohomology: cocycles of the target pulled back and
/// taken modulo source coboundaries.
std::size_t induced_rank_cohomology(const SimplicialMap& map, int r, const FieldKind& f);

/// Alternating sums of simplex counts and Betti numbers of the stored
/// skeleton (all faces through max_dim()). `complete` is set when the top
/// stored dimension is empty, i.e. the skeleton is the whole complex.
struct EulerCheck {
  bool complete = false;
  long long from_counts = 0;
  long long from_betti = 0;
  bool holds() const { return from_counts == from_betti; }
};
EulerCheck euler_check(const SimplicialComplex& c, const FieldKind& f);

enum class LimitKind { Finite, Infinite, Unknown };
std::string to_string(LimitKind k);

/// Verdict on dim of the limit group, with the result licensing it.
struct LimitVerdict {
  LimitKind kind = LimitKind::Unknown;
  std::size_t value = 0;
  std::string tag;
  std::string note;
};

/// Hypotheses about the system that the limit verdicts depend on.
struct TowerFacts {
  bool postunbranched = false;
  std::string postunbranched_basis;  // e.g. "symbolic", "checked to depth 6"
  bool injective_or_backward = false;
  bool h1_infinite_conditions = false;
  std::string h1_infinite_tag;
  bool common_fixed_point = false;
};

struct BettiTable {
  std::string field;
  int m = 0;
  int dim_cap = 0;
  std::vector<std::vector<std::size_t>> a;          // a[k-1][r] = a_{r,k}
  std::vector<std::optional<std::size_t>> lambda;   // lambda[k-1]; unset for k = 1
  std::vector<std::size_t> components;              // per level
  std::vector<std::vector<double>> growth;          // (1/k) log a_{r,k}; -inf when 0
  std::vector<LimitVerdict> limits;                 // per r
  std::optional<std::size_t> b1_estimate;           // last lambda
  int lambda_stable_levels = 0;                     // levels with that value
  bool conditional = false;                         // built with uncertain simplices

  int depth() const { return static_cast<int>(a.size()); }
  std::size_t at(int r, int k) const { return a.at(k - 1).at(r); }
};

/// a_{r,k} for r <= dim_cap, lambda_k = rank (phi_{k,1})_* on H_1, component
/// counts, growth rates and per-r limit verdicts.
BettiTable tower_analysis(const Tower& tower, const FieldKind& f, int dim_cap,
                          const TowerFacts& facts);

}  // namespace icoh
