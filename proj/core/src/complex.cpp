#include "icoh/complex.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "icoh/errors.hpp"

namespace icoh {

namespace {

const std::set<Simplex> kEmpty;

void add_faces(std::vector<std::set<Simplex>>& faces, const Simplex& s) {
  const int d = static_cast<int>(s.size()) - 1;
  if (d < 0) return;
  const auto top = faces.size();  // simplices of size <= top are stored
  if (s.size() > top) {
    // only the top-size subsets matter; walk them as combinations
    std::vector<std::size_t> idx(top);
    std::iota(idx.begin(), idx.end(), 0);
    Simplex sub(top);
    while (true) {
      for (std::size_t i = 0; i < top; ++i) sub[i] = s[idx[i]];
      add_faces(faces, sub);
      std::size_t i = top;
      while (i > 0 && idx[i - 1] == s.size() - top + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < top; ++j) idx[j] = idx[j - 1] + 1;
    }
    return;
  }
  if (!faces[d].insert(s).second) return;  // faces already present
  if (d == 0) return;
  Simplex face(s.size() - 1);
  for (std::size_t drop = 0; drop < s.size(); ++drop) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i != drop) face[j++] = s[i];
    }
    if (static_cast<int>(face.size()) - 1 < static_cast<int>(faces.size()) &&
        faces[face.size() - 1].count(face)) {
      continue;
    }
    add_faces(faces, face);
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(int m, int level, int max_dim)
    : m_(m), level_(level), max_dim_(max_dim) {
  if (max_dim < 0) throw InputError("max_dim must be >= 0");
  vertex_count_ = word_count(m, static_cast<std::size_t>(level),
                             std::numeric_limits<std::uint32_t>::max());
  faces_.resize(max_dim + 1);
  for (Vertex v = 0; v < vertex_count_; ++v) faces_[0].insert(faces_[0].end(), Simplex{v});
}

SimplicialComplex SimplicialComplex::from_simplices(int m, int level, int max_dim,
                                                    const std::vector<Simplex>& simplices) {
  SimplicialComplex c(m, level, max_dim);
  for (const auto& s : simplices) c.add(s);
  return c;
}

Word SimplicialComplex::vertex_word(Vertex v) const {
  return Word::from_index(m_, static_cast<std::size_t>(level_), v);
}

Vertex SimplicialComplex::vertex_of(const Word& w) const {
  if (w.size() != static_cast<std::size_t>(level_) || w.alphabet() != m_) {
    throw InputError("word " + w.to_string() + " is not a vertex of this complex");
  }
  return static_cast<Vertex>(w.index());
}

void SimplicialComplex::add(Simplex s) {
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw InputError("simplex with repeated vertex");
  }
  for (Vertex v : s) {
    if (v >= vertex_count_) throw InputError("simplex vertex out of range");
  }
  add_faces(faces_, s);
}

bool SimplicialComplex::contains(const Simplex& s) const {
  const int d = static_cast<int>(s.size()) - 1;
  if (d < 0 || d > max_dim_) return false;
  return faces_[d].count(s) > 0;
}

const std::set<Simplex>& SimplicialComplex::simplices(int d) const {
  if (d < 0 || d > max_dim_) return kEmpty;
  return faces_[d];
}

int SimplicialComplex::dimension() const {
  for (int d = max_dim_; d >= 0; --d) {
    if (!faces_[d].empty()) return d;
  }
  return -1;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= max_dim_; ++d) {
    std::set<Simplex> covered;
    if (d < max_dim_) {
      for (const auto& t : faces_[d + 1]) {
        for (std::size_t drop = 0; drop < t.size(); ++drop) {
          Simplex f = t;
          f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
          covered.insert(std::move(f));
        }
      }
    }
    for (const auto& s : faces_[d]) {
      if (!covered.count(s)) out.push_back(s);
    }
  }
  return out;
}

SimplicialComplex SimplicialComplex::truncated(int d) const {
  SimplicialComplex c = *this;
  if (d < max_dim_) {
    c.faces_.resize(d + 1);
    c.max_dim_ = d;
  }
  return c;
}

Simplex SimplicialMap::image(const Simplex& s) const {
  Simplex out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(vertex_image.at(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner) {
  if (inner.target != outer.source) {
    throw InputError("composing simplicial maps with mismatched complexes");
  }
  SimplicialMap f{inner.source, outer.target, {}};
  f.vertex_image.reserve(inner.vertex_image.size());
  for (Vertex v : inner.vertex_image) f.vertex_image.push_back(outer.vertex_image.at(v));
  return f;
}

bool is_simplicial(const SimplicialMap& f) {
  const int top = std::min(f.source->max_dim(), f.target->max_dim());
  for (int d = 0; d <= f.source->max_dim(); ++d) {
    for (const auto& s : f.source->simplices(d)) {
      Simplex img = f.image(s);
      if (static_cast<int>(img.size()) - 1 > top) continue;  // beyond storage
      if (!f.target->contains(img)) return false;
    }
  }
  return true;
}

bool is_surjective_on_simplices(const SimplicialMap& f) {
  const int top = std::min(f.source->max_dim(), f.target->max_dim());
  std::set<Simplex> hit;
  for (int d = 0; d <= top; ++d) {
    for (const auto& s : f.source->simplices(d)) hit.insert(f.image(s));
  }
  for (int d = 0; d <= top; ++d) {
    for (const auto& t : f.target->simplices(d)) {
      if (!hit.count(t)) return false;
    }
  }
  return true;
}

SimplicialMap truncation_map(const SimplicialComplex& n_long,
                             const SimplicialComplex& n_short) {
  if (n_long.alphabet() != n_short.alphabet() || n_long.level() <= n_short.level()) {
    throw InputError("truncation map needs a longer and a shorter level of one system");
  }
  std::uint64_t div = 1;
  for (int i = n_short.level(); i < n_long.level(); ++i) div *= n_long.alphabet();
  SimplicialMap f{&n_long, &n_short, {}};
  f.vertex_image.resize(n_long.vertex_count());
  for (Vertex v = 0; v < n_long.vertex_count(); ++v) {
    f.vertex_image[v] = static_cast<Vertex>(v / div);  // drop trailing symbols
  }
  if (!is_simplicial(f)) {
    throw ConsistencyError("truncation N_" + std::to_string(n_long.level()) + " -> N_" +
                           std::to_string(n_short.level()) + " is not simplicial");
  }
  if (!is_surjective_on_simplices(f)) {
    throw ConsistencyError("truncation N_" + std::to_string(n_long.level()) + " -> N_" +
                           std::to_string(n_short.level()) + " is not onto simplices");
  }
  return f;
}

Block block_subcomplex(const SimplicialComplex& n, const Word& w) {
  if (w.size() >= static_cast<std::size_t>(n.level())) {
    throw InputError("block prefix must be shorter than the level");
  }
  const int sub_level = n.level() - static_cast<int>(w.size());
  Block b{SimplicialComplex(n.alphabet(), sub_level, n.max_dim()), {}};
  const std::uint64_t size = b.complex.vertex_count();
  const std::uint64_t offset = w.index() * size;
  b.embedding.resize(size);
  for (Vertex u = 0; u < size; ++u) b.embedding[u] = static_cast<Vertex>(offset + u);
  for (int d = 1; d <= n.max_dim(); ++d) {
    // Lexicographic order keeps the block contiguous.
    auto it = n.simplices(d).lower_bound(Simplex{static_cast<Vertex>(offset)});
    for (; it != n.simplices(d).end() && it->front() < offset + size; ++it) {
      if (it->back() >= offset + size) continue;
      Simplex s(*it);
      for (auto& v : s) v = static_cast<Vertex>(v - offset);
      b.complex.add(std::move(s));
    }
  }
  return b;
}

Components connected_components(const SimplicialComplex& c) {
  const std::size_t n = c.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& e : c.simplices(1)) {
    std::size_t a = find(e[0]), b = find(e[1]);
    if (a == b) continue;
    if (a < b) std::swap(a, b);
    parent[a] = b;  // root is always the least vertex
  }
  Components out;
  out.label.resize(n);
  std::vector<std::size_t> root_label(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = find(v);
    if (root_label[r] == n) {
      root_label[r] = out.count++;
      out.representative.push_back(static_cast<Vertex>(r));
    }
    out.label[v] = root_label[r];
  }
  return out;
}

}  // namespace icoh
