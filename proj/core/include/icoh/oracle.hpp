#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "icoh/complex.hpp"
#include "icoh/geometry.hpp"
#include "icoh/system.hpp"
#include "icoh/words.hpp"

namespace icoh {

struct Budget {
  int refine_depth = 8;
  int cert_period_max = 2;
  int cert_preperiod_max = 1;
  /// Alive tuples allowed per refinement round before giving up.
  std::size_t alive_cap = 200000;

  void check() const;  // throws InputError unless all depths are >= 1
};

enum class VerdictKind { Disjoint, Intersect, Unknown };
std::string to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  /// Disjoint: refinement depth at which no envelope tuple survived.
  int depth = 0;
  /// Intersect on geometric systems: the common point and one address per
  /// queried word (in query order), each extending its word.
  std::optional<Point2> point;
  std::vector<Address> addresses;
  /// Unknown: which part of the budget ran out.
  std::string reason;
};

enum class Membership { Yes, No, Unknown };
std::string to_string(Membership m);

/// Outcome of refining a tuple of cells symbol by symbol.
struct Refinement {
  bool emptied = false;  // no tuple of extensions had a common envelope point
  int rounds = 0;        // rounds performed
  bool capped = false;   // stopped because of alive_cap
  /// Common envelope regions of the surviving tuples after the last round.
  std::vector<ConvexPolygon> regions;
  /// Set when every surviving region is the same single point.
  std::optional<Point2> collapsed_point;
  int collapse_round = -1;
};

/// Certified intersection oracle over any backend. Thread-safe; caches are
/// filled lazily under a lock.
class Oracle {
 public:
  explicit Oracle(SystemSpec spec);

  const SystemSpec& spec() const { return spec_; }

  /// Geometric only: c_w(K).
  ConvexPolygon cell_envelope(const Word& w) const;
  AffineMap word_map(const Word& w) const;
  /// Geometric only: the unique point of L_a.
  Point2 limit_point(const Address& a) const;

  /// Three-valued test for a nonempty common intersection of the cells.
  Verdict cells_intersect(const std::vector<Word>& ws, const Budget& b = {}) const;

  /// Geometric only: whether p lies in the true cell of w.
  Membership point_in_cell(const Point2& p, const Word& w, const Budget& b = {}) const;

  /// Geometric only: alive-tuple refinement of the cells of ws, continued
  /// for b.refine_depth rounds or until the alive set is empty.
  Refinement refine(const std::vector<Word>& ws, const Budget& b = {}) const;

  /// Limit points of s(v)^inf with |s| <= pre_max, 1 <= |v| <= per_max, each
  /// with its shortest (then lexicographically least) address.
  const std::map<Point2, Address>& certificate_points(int pre_max, int per_max) const;

 private:
  void check_tuple(const std::vector<Word>& ws) const;
  Verdict geometric_intersect(const std::vector<Word>& ws, const Budget& b) const;
  Verdict table_intersect(const std::vector<Word>& ws) const;
  Verdict symbolic_intersect(const std::vector<Word>& ws) const;

  SystemSpec spec_;
  std::vector<AffineMap> maps_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<std::map<Point2, Address>>> cert_cache_;
};

/// Whether the symbolic recursion makes ws a simplex of N_{|w|}.
bool symbolic_is_simplex(const SystemSpec& spec, const std::vector<Word>& ws);

/// Explicit N_k of a symbolic system, stored through max_dim. Throws
/// ValidationError when the addresses of some N_1 simplex disagree.
SimplicialComplex generate_pu_nerve(const SystemSpec& spec, int k, int max_dim);

/// Address consistency of a symbolic system up to depth k; throws
/// ValidationError naming the offending simplex and vertex.
void check_address_consistency(const SystemSpec& spec, int k);

}  // namespace icoh
