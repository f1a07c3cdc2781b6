#include "icoh/homology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include <gmpxx.h>

#include "icoh/errors.hpp"

namespace icoh {

FieldKind FieldKind::gf(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t{1} << 31)) throw InputError("GF(p) needs a prime p < 2^31");
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw InputError(std::to_string(p) + " is not prime");
  }
  return {false, p};
}

FieldKind FieldKind::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text == "gf2") return gf(2);
  if (text.rfind("gfp:", 0) == 0) {
    const std::string digits = text.substr(4);
    if (digits.empty() || digits.size() > 10 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw InputError("bad field '" + text + "'");
    }
    return gf(std::stoll(digits));
  }
  throw InputError("unknown field '" + text + "' (expected q, gf2 or gfp:<prime>)");
}

std::string FieldKind::name() const {
  if (rational) return "Q";
  return "GF(" + std::to_string(p) + ")";
}

namespace {

struct PrimeField {
  using T = std::int64_t;
  std::int64_t p;

  T from_int(long v) const { return ((v % p) + p) % p; }
  bool zero(T a) const { return a == 0; }
  T sub(T a, T b) const { return (a - b + p) % p; }
  T mul(T a, T b) const { return (a * b) % p; }
  T inv(T a) const {
    T result = 1, base = a, e = p - 2;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
};

struct RationalField {
  using T = mpq_class;

  T from_int(long v) const { return T(v); }
  bool zero(const T& a) const { return sgn(a) == 0; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return 1 / a; }
};

template <class F>
using Column = std::vector<std::pair<std::uint32_t, typename F::T>>;

/// a - c * b on sorted sparse columns.
template <class F>
Column<F> axpy(const F& f, const Column<F>& a, const typename F::T& c, const Column<F>& b) {
  Column<F> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, f.sub(f.from_int(0), f.mul(c, b[j].second)));
      ++j;
    } else {
      auto v = f.sub(a[i].second, f.mul(c, b[j].second));
      if (!f.zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

/// Incremental column echelon form keyed by lowest nonzero row.
template <class F>
class Reducer {
 public:
  explicit Reducer(F f) : f_(std::move(f)) {}

  /// Reduces c (and its combination record) against the stored columns.
  /// Returns true when c is independent of them; it is then stored.
  bool add(Column<F> c, Column<F>* combo = nullptr) {
    while (!c.empty()) {
      auto it = pivot_.find(c.back().first);
      if (it == pivot_.end()) break;
      const auto& other = cols_[it->second];
      const auto factor = f_.mul(c.back().second, f_.inv(other.back().second));
      c = axpy(f_, c, factor, other);
      if (combo) *combo = axpy(f_, *combo, factor, combos_[it->second]);
    }
    if (c.empty()) return false;
    pivot_.emplace(c.back().first, cols_.size());
    cols_.push_back(std::move(c));
    combos_.push_back(combo ? *combo : Column<F>{});
    return true;
  }
  std::size_t rank() const { return cols_.size(); }

 private:
  F f_;
  std::vector<Column<F>> cols_;
  std::vector<Column<F>> combos_;
  std::unordered_map<std::uint32_t, std::size_t> pivot_;
};

std::vector<Simplex> as_vector(const SimplicialComplex& c, int d) {
  const auto& s = c.simplices(d);
  return {s.begin(), s.end()};
}

std::uint32_t index_of(const std::vector<Simplex>& sorted, const Simplex& s) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), s);
  if (it == sorted.end() || *it != s) throw ConsistencyError("face missing from complex");
  return static_cast<std::uint32_t>(it - sorted.begin());
}

/// Columns of d_r: one per r-simplex, rows indexed by (r-1)-simplices.
template <class F>
std::vector<Column<F>> boundary_columns(const F& f, const SimplicialComplex& c, int r) {
  std::vector<Column<F>> cols;
  if (r <= 0) return cols;
  const auto faces = as_vector(c, r - 1);
  for (const auto& s : c.simplices(r)) {
    Column<F> col;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      col.emplace_back(index_of(faces, face), f.from_int(i % 2 == 0 ? 1 : -1));
    }
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    cols.push_back(std::move(col));
  }
  return cols;
}

template <class Col>
std::vector<Col> transpose(const std::vector<Col>& cols, std::size_t rows) {
  std::vector<Col> out(rows);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [i, v] : cols[j]) out[i].emplace_back(static_cast<std::uint32_t>(j), v);
  }
  return out;  // entries come out sorted since j increases
}

template <class F>
std::size_t rank_of(const F& f, std::vector<Column<F>> cols) {
  Reducer<F> red(f);
  for (auto& c : cols) red.add(std::move(c));
  return red.rank();
}

/// Basis of the kernel of the matrix with the given columns, as vectors over
/// the column index space.
template <class F>
std::vector<Column<F>> kernel(const F& f, const std::vector<Column<F>>& cols) {
  Reducer<F> red(f);
  std::vector<Column<F>> out;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Column<F> combo{{static_cast<std::uint32_t>(j), f.from_int(1)}};
    Column<F> c = cols[j];
    // Track the combination through reduction by reducing a copy.
    Column<F> tracked = combo;
    if (!red.add(std::move(c), &tracked)) out.push_back(std::move(tracked));
  }
  return out;
}

/// Signed image of an oriented r-simplex; nullopt when it degenerates.
std::optional<std::pair<Simplex, int>> signed_image(const SimplicialMap& map, const Simplex& s) {
  Simplex img;
  for (Vertex v : s) img.push_back(map.vertex_image.at(v));
  int sign = 1;
  for (std::size_t i = 0; i < img.size(); ++i) {
    for (std::size_t j = i + 1; j < img.size(); ++j) {
      if (img[i] == img[j]) return std::nullopt;
      if (img[i] > img[j]) sign = -sign;
    }
  }
  std::sort(img.begin(), img.end());
  return std::make_pair(std::move(img), sign);
}

void require_stored(const SimplicialComplex& c, int r) {
  if (r < 0) throw InputError("negative degree");
  if (r >= c.max_dim()) {
    throw InputError("degree " + std::to_string(r) + " needs simplices of dimension " +
                     std::to_string(r + 1) + ", stored only through " +
                     std::to_string(c.max_dim()));
  }
}

template <class F>
std::size_t induced_rank_impl(const F& f, const SimplicialMap& map, int r) {
  const auto& src = *map.source;
  const auto& tgt = *map.target;
  require_stored(tgt, r);
  if (r > src.max_dim()) throw InputError("degree beyond source storage");
  const auto tgt_r = as_vector(tgt, r);
  // Cycles of the source.
  std::vector<Column<F>> cycles;
  if (r == 0) {
    for (std::uint32_t i = 0; i < src.count(0); ++i) cycles.push_back({{i, f.from_int(1)}});
  } else {
    cycles = kernel(f, boundary_columns(f, src, r));
  }
  const auto src_r = as_vector(src, r);
  Reducer<F> red(f);
  for (auto& c : boundary_columns(f, tgt, r + 1)) red.add(std::move(c));
  const std::size_t base = red.rank();
  for (const auto& z : cycles) {
    Column<F> image;
    for (const auto& [i, v] : z) {
      auto si = signed_image(map, src_r[i]);
      if (!si) continue;
      if (!tgt.contains(si->first)) throw ConsistencyError("map is not simplicial");
      const auto row = index_of(tgt_r, si->first);
      image = axpy(f, image, f.from_int(-si->second), Column<F>{{row, v}});
    }
    red.add(std::move(image));
  }
  return red.rank() - base;
}

template <class F>
std::size_t induced_rank_cohomology_impl(const F& f, const SimplicialMap& map, int r) {
  const auto& src = *map.source;
  const auto& tgt = *map.target;
  require_stored(tgt, r);
  require_stored(src, r);
  const auto tgt_r = as_vector(tgt, r);
  const auto src_r = as_vector(src, r);
  // Cocycles of the target: kernel of the coboundary C^r -> C^{r+1}.
  const auto cocycles = kernel(f, transpose(boundary_columns(f, tgt, r + 1), tgt_r.size()));
  // Coboundaries of the source: image of C^{r-1} -> C^r.
  Reducer<F> red(f);
  if (r > 0) {
    for (auto& c : transpose(boundary_columns(f, src, r), src.count(r - 1))) red.add(std::move(c));
  }
  const std::size_t base = red.rank();
  // Pullback: (phi^# z)(sigma) = z(phi_# sigma).
  std::vector<std::optional<std::pair<std::uint32_t, int>>> pulled(src_r.size());
  for (std::size_t i = 0; i < src_r.size(); ++i) {
    auto si = signed_image(map, src_r[i]);
    if (!si) continue;
    pulled[i] = std::make_pair(index_of(tgt_r, si->first), si->second);
  }
  std::vector<std::vector<std::uint32_t>> preimages(tgt_r.size());
  for (std::size_t i = 0; i < src_r.size(); ++i) {
    if (pulled[i]) preimages[pulled[i]->first].push_back(static_cast<std::uint32_t>(i));
  }
  for (const auto& z : cocycles) {
    Column<F> image;
    for (const auto& [row, v] : z) {
      for (auto i : preimages[row]) {
        image.emplace_back(i, f.mul(v, f.from_int(pulled[i]->second)));
      }
    }
    std::sort(image.begin(), image.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    red.add(std::move(image));
  }
  return red.rank() - base;
}

template <class Fn>
auto with_field(const FieldKind& f, Fn&& fn) {
  if (f.rational) return fn(RationalField{});
  return fn(PrimeField{f.p});
}

}  // namespace

std::size_t boundary_rank(const SimplicialComplex& c, const FieldKind& f, int r) {
  if (r <= 0 || r > c.max_dim()) return 0;
  return with_field(f, [&](const auto& fld) { return rank_of(fld, boundary_columns(fld, c, r)); });
}

std::size_t betti(const SimplicialComplex& c, const FieldKind& f, int r) {
  require_stored(c, r);
  return c.count(r) - boundary_rank(c, f, r) - boundary_rank(c, f, r + 1);
}

std::size_t induced_rank(const SimplicialMap& map, int r, const FieldKind& f) {
  return with_field(f, [&](const auto& fld) { return induced_rank_impl(fld, map, r); });
}

std::size_t induced_rank_cohomology(const SimplicialMap& map, int r, const FieldKind& f) {
  return with_field(f, [&](const auto& fld) { return induced_rank_cohomology_impl(fld, map, r); });
}

EulerCheck euler_check(const SimplicialComplex& c, const FieldKind& f) {
  EulerCheck e;
  const int top = c.max_dim();
  e.complete = c.count(top) == 0;
  for (int r = 0; r <= top; ++r) {
    const long long sign = r % 2 == 0 ? 1 : -1;
    // the stored skeleton has no (top+1)-simplices, so H_top of it is Z_top
    const std::size_t b = r < top ? betti(c, f, r) : c.count(r) - boundary_rank(c, f, r);
    e.from_counts += sign * static_cast<long long>(c.count(r));
    e.from_betti += sign * static_cast<long long>(b);
  }
  return e;
}

std::string to_string(LimitKind k) {
  switch (k) {
    case LimitKind::Finite: return "Finite";
    case LimitKind::Infinite: return "Infinite";
    case LimitKind::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

LimitVerdict finite(std::size_t v, std::string tag, std::string note = {}) {
  return {LimitKind::Finite, v, std::move(tag), std::move(note)};
}

LimitVerdict infinite(std::string tag, std::string note = {}) {
  return {LimitKind::Infinite, 0, std::move(tag), std::move(note)};
}

LimitVerdict degree0(const BettiTable& t, const TowerFacts& facts) {
  const std::size_t m = static_cast<std::size_t>(t.m);
  const std::size_t a01 = t.at(0, 1);
  const std::size_t a11 = t.at(1, 1);
  if (facts.common_fixed_point) return finite(1, "intgroup0rem", "common fixed point of all maps");
  if (a01 == 1) return finite(1, "1conall", "every N_k is connected");
  if (facts.postunbranched && facts.injective_or_backward && m >= 2) {
    // puthm6: a_{0,inf} is either infinite or in [a01, (m - a01 + a11) / (m - 1)].
    const std::size_t s1 = m - a01 + a11;  // dim H^1(S_1)
    for (int k = 1; k <= t.depth(); ++k) {
      if (t.at(0, k) * (m - 1) > s1) {
        return infinite("puthm5", "a_{0," + std::to_string(k) + "} = " +
                                      std::to_string(t.at(0, k)) + " > (m - a_{0,1} + a_{1,1})/(m-1) = " +
                                      std::to_string(s1) + "/" + std::to_string(m - 1));
      }
    }
    if (m <= 6) return infinite("puthmless6", "2 <= m <= 6 and N_1 disconnected");
    return {LimitKind::Unknown, 0, "puthm6",
            "a_{0,inf} is infinite or at most " + std::to_string(s1) + "/" +
                std::to_string(m - 1)};
  }
  return {LimitKind::Unknown, 0, "", "no applicable certificate"};
}

LimitVerdict degree1(const BettiTable& t, const TowerFacts& facts) {
  const std::size_t a11 = t.at(1, 1);
  if (facts.common_fixed_point) return finite(0, "intgroup0rem", "common fixed point of all maps");
  const bool connected = t.at(0, 1) == 1;
  if (facts.postunbranched && facts.injective_or_backward) {
    if (connected) {
      if (a11 == 0) return finite(0, "puthm7c", "a_{1,1} = 0 with N_1 connected");
      return infinite("puthm7c", "a_{1,1} = " + std::to_string(a11) + " != 0 with N_1 connected");
    }
    if (t.depth() >= 2 && t.lambda[1] && *t.lambda[1] == 0) {
      return finite(0, "puthmB2zero", "B_2 = 0");
    }
    if (a11 == 0 && t.depth() >= 2) {
      return finite(0, "puthmB2zero", "a_{1,1} = 0 forces B_2 = 0");
    }
    return {LimitKind::Unknown, 0, "puthmavalues", "a_{1,inf} is 0 or infinite"};
  }
  if (facts.h1_infinite_conditions) {
    return infinite(facts.h1_infinite_tag, "all four conditions certified");
  }
  return {LimitKind::Unknown, 0, "", "no applicable certificate"};
}

LimitVerdict degree_r(const BettiTable& t, int r, const TowerFacts& facts) {
  if (facts.common_fixed_point) return finite(0, "intgroup0rem", "common fixed point of all maps");
  if (facts.postunbranched && facts.injective_or_backward) {
    if (t.at(r, 1) == 0) return finite(0, "puthmcohsupp", "a_{r,1} = 0");
    return infinite("puthmcohsupp", "a_{r,1} = " + std::to_string(t.at(r, 1)) + " != 0");
  }
  return {LimitKind::Unknown, 0, "", "no applicable certificate"};
}

}  // namespace

BettiTable tower_analysis(const Tower& tower, const FieldKind& f, int dim_cap,
                          const TowerFacts& facts) {
  if (tower.depth() < 1) throw InputError("empty tower");
  if (dim_cap < 1) throw InputError("dim_cap must be >= 1");
  BettiTable t;
  t.field = f.name();
  t.m = tower.at(1).alphabet();
  t.dim_cap = dim_cap;
  t.conditional = !tower.certain();
  for (int k = 1; k <= tower.depth(); ++k) {
    const auto& nk = tower.at(k);
    std::vector<std::size_t> row;
    std::vector<double> growth;
    for (int r = 0; r <= dim_cap; ++r) {
      row.push_back(betti(nk, f, r));
      growth.push_back(row.back() == 0 ? -std::numeric_limits<double>::infinity()
                                       : std::log(static_cast<double>(row.back())) / k);
    }
    t.a.push_back(std::move(row));
    t.growth.push_back(std::move(growth));
    t.components.push_back(connected_components(nk).count);
    if (k == 1) {
      t.lambda.push_back(std::nullopt);
    } else {
      const auto phi = truncation_map(nk, tower.at(1));
      t.lambda.push_back(induced_rank(phi, 1, f));
    }
  }
  for (int k = tower.depth(); k >= 2; --k) {
    if (!t.b1_estimate) {
      t.b1_estimate = t.lambda[k - 1];
      t.lambda_stable_levels = 1;
    } else if (t.lambda[k - 1] == t.b1_estimate) {
      ++t.lambda_stable_levels;
    } else {
      break;
    }
  }
  t.limits.push_back(degree0(t, facts));
  t.limits.push_back(degree1(t, facts));
  for (int r = 2; r <= dim_cap; ++r) t.limits.push_back(degree_r(t, r, facts));
  return t;
}

}  // namespace icoh
