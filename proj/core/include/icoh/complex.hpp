#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "icoh/words.hpp"

namespace icoh {

using Vertex = std::uint32_t;
/// Sorted, duplicate-free vertex indices. A vertex index is the
/// lexicographic rank of its word, so sorted order is lexicographic word order.
using Simplex = std::vector<Vertex>;

/// Downward-closed simplicial complex on all m^level words. Faces are stored
/// through dimension max_dim(); higher simplices are cut off.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(int m, int level, int max_dim);

  /// Closure of the given simplices (faces above max_dim dropped).
  static SimplicialComplex from_simplices(int m, int level, int max_dim,
                                          const std::vector<Simplex>& simplices);

  int alphabet() const { return m_; }
  int level() const { return level_; }
  int max_dim() const { return max_dim_; }
  std::size_t vertex_count() const { return vertex_count_; }
  Word vertex_word(Vertex v) const;
  Vertex vertex_of(const Word& w) const;

  /// Inserts s and all its faces. Throws InputError on bad vertices.
  void add(Simplex s);
  bool contains(const Simplex& s) const;

  /// d-simplices in lexicographic order (empty set when d > max_dim()).
  const std::set<Simplex>& simplices(int d) const;
  std::size_t count(int d) const { return simplices(d).size(); }
  /// Highest nonempty dimension.
  int dimension() const;
  std::vector<Simplex> maximal_simplices() const;
  /// Same complex with faces above d removed.
  SimplicialComplex truncated(int d) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.m_ == b.m_ && a.level_ == b.level_ && a.faces_ == b.faces_;
  }

 private:
  int m_ = 1;
  int level_ = 0;
  int max_dim_ = 0;
  std::size_t vertex_count_ = 0;
  std::vector<std::set<Simplex>> faces_;
};

/// Vertex map between complexes; simplices map to the sorted set of images.
struct SimplicialMap {
  const SimplicialComplex* source = nullptr;
  const SimplicialComplex* target = nullptr;
  std::vector<Vertex> vertex_image;

  Simplex image(const Simplex& s) const;
};

SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner);

/// phi_{l,k}: w -> w|k. Throws InputError when the levels are not
/// long > short, ConsistencyError when simpliciality or surjectivity fails.
SimplicialMap truncation_map(const SimplicialComplex& n_long,
                             const SimplicialComplex& n_short);

/// Whether every source simplex maps onto a target simplex.
bool is_simplicial(const SimplicialMap& f);
/// Whether every target simplex is the image of a source simplex.
bool is_surjective_on_simplices(const SimplicialMap& f);

/// Full subcomplex on the words with prefix w, relabelled to level
/// level - |w|, together with the embedding u -> wu.
struct Block {
  SimplicialComplex complex;
  std::vector<Vertex> embedding;
};
Block block_subcomplex(const SimplicialComplex& n, const Word& w);

/// Connected components of the 1-skeleton. label[v] is the component index;
/// components are numbered by their least vertex.
struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> label;
  std::vector<Vertex> representative;
};
Components connected_components(const SimplicialComplex& c);

}  // namespace icoh
