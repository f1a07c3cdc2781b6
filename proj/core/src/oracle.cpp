#include "icoh/oracle.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "icoh/errors.hpp"

namespace icoh {

void Budget::check() const {
  if (refine_depth < 1 || cert_period_max < 1 || cert_preperiod_max < 1) {
    throw InputError("budget depths must all be >= 1");
  }
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Disjoint: return "Disjoint";
    case VerdictKind::Intersect: return "Intersect";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::Yes: return "Yes";
    case Membership::No: return "No";
    case Membership::Unknown: return "Unknown";
  }
  return "?";
}

Oracle::Oracle(SystemSpec spec) : spec_(std::move(spec)) {
  validate(spec_);
  if (spec_.is_geometric()) maps_ = cell_maps(spec_);
}

ConvexPolygon Oracle::cell_envelope(const Word& w) const {
  return map_polygon(word_map(w), spec_.geometric().envelope);
}

AffineMap Oracle::word_map(const Word& w) const {
  if (!spec_.is_geometric()) {
    throw UnsupportedError("cell envelopes need a geometric system");
  }
  if (w.alphabet() != spec_.m) throw InputError("word alphabet mismatch");
  return cell_map(maps_, w);
}

Point2 Oracle::limit_point(const Address& a) const {
  const AffineMap per = word_map(a.period());
  if (!is_contraction(per)) throw UnsupportedError("period map is not a contraction");
  return word_map(a.preperiod())(fixed_point(per));
}

const std::map<Point2, Address>& Oracle::certificate_points(int pre_max, int per_max) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto& slot = cert_cache_[{pre_max, per_max}];
  if (slot) return *slot;
  const int m = spec_.m;
  struct Candidate {
    Word pre, per;
  };
  std::vector<Candidate> cands;
  for (int pl = 0; pl <= pre_max; ++pl) {
    const auto pres = pl == 0 ? std::vector<Word>{Word(m)}
                              : enumerate_words(m, static_cast<std::size_t>(pl));
    for (int ql = 1; ql <= per_max; ++ql) {
      for (const auto& per : enumerate_words(m, static_cast<std::size_t>(ql))) {
        for (const auto& pre : pres) cands.push_back({pre, per});
      }
    }
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    return std::make_tuple(a.pre.size() + a.per.size(), a.pre, a.per) <
           std::make_tuple(b.pre.size() + b.per.size(), b.pre, b.per);
  });
  auto points = std::make_unique<std::map<Point2, Address>>();
  std::map<Word, Point2> fixed;
  for (const auto& c : cands) {
    auto it = fixed.find(c.per);
    if (it == fixed.end()) {
      it = fixed.emplace(c.per, fixed_point(cell_map(maps_, c.per))).first;
    }
    Point2 p = cell_map(maps_, c.pre)(it->second);
    points->emplace(std::move(p), Address(c.pre, c.per));
  }
  slot = std::move(points);
  return *slot;
}

void Oracle::check_tuple(const std::vector<Word>& ws) const {
  if (ws.empty()) throw InputError("empty word tuple");
  std::set<Word> seen;
  for (const auto& w : ws) {
    if (w.alphabet() != spec_.m) throw InputError("word alphabet mismatch");
    if (w.size() != ws[0].size() || w.empty()) {
      throw InputError("tuple words must share one positive length");
    }
    if (!seen.insert(w).second) throw InputError("repeated word " + w.to_string());
  }
}

Verdict Oracle::cells_intersect(const std::vector<Word>& ws, const Budget& b) const {
  b.check();
  check_tuple(ws);
  if (spec_.is_geometric()) return geometric_intersect(ws, b);
  if (spec_.is_table()) return table_intersect(ws);
  return symbolic_intersect(ws);
}

Verdict Oracle::table_intersect(const std::vector<Word>& ws) const {
  const int k = static_cast<int>(ws[0].size());
  Verdict v;
  const auto& levels = spec_.table().levels;
  auto it = levels.find(k);
  if (it == levels.end()) {
    throw InputError("table system '" + spec_.name + "' stores no level " + std::to_string(k));
  }
  for (const auto& simplex : it->second) {
    bool all = std::all_of(ws.begin(), ws.end(), [&](const Word& w) {
      return std::find(simplex.begin(), simplex.end(), w) != simplex.end();
    });
    if (all) {
      v.kind = VerdictKind::Intersect;
      return v;
    }
  }
  v.kind = VerdictKind::Disjoint;
  return v;
}

Verdict Oracle::symbolic_intersect(const std::vector<Word>& ws) const {
  check_address_consistency(spec_, static_cast<int>(ws[0].size()));
  Verdict v;
  v.kind = symbolic_is_simplex(spec_, ws) ? VerdictKind::Intersect : VerdictKind::Disjoint;
  return v;
}

namespace {

std::optional<ConvexPolygon> common_region(const std::vector<ConvexPolygon>& ps) {
  std::optional<ConvexPolygon> cur = ps[0];
  for (std::size_t i = 1; i < ps.size() && cur; ++i) cur = intersect(*cur, ps[i]);
  return cur;
}

}  // namespace

Verdict Oracle::geometric_intersect(const std::vector<Word>& ws, const Budget& b) const {
  const auto& k = spec_.geometric().envelope;
  const std::size_t r = ws.size();
  std::vector<AffineMap> a(r);
  std::vector<ConvexPolygon> env(r);
  for (std::size_t j = 0; j < r; ++j) {
    a[j] = word_map(ws[j]);
    env[j] = map_polygon(a[j], k);
  }
  Verdict v;
  const auto region = common_region(env);
  if (!region) {
    v.kind = VerdictKind::Disjoint;
    v.depth = 0;
    return v;
  }

  // Certificate: a point of the region whose pullback through every word is
  // a known periodic limit point.
  const auto& q = certificate_points(b.cert_preperiod_max, b.cert_period_max);
  auto resolve = [&](const Point2& p, std::size_t j) -> const Address* {
    if (a[j].invertible()) {
      auto it = q.find(a[j].inverse()(p));
      return it == q.end() ? nullptr : &it->second;
    }
    for (const auto& [pt, addr] : q) {
      if (a[j](pt) == p) return &addr;
    }
    return nullptr;
  };
  std::vector<Point2> candidates;
  if (region->is_point()) {
    candidates.push_back(region->vertices()[0]);
  } else if (a[0].invertible()) {
    const auto pulled = map_polygon(a[0].inverse(), *region);
    for (const auto& [pt, addr] : q) {
      if (pulled.contains(pt)) candidates.push_back(a[0](pt));
    }
  } else {
    for (const auto& [pt, addr] : q) {
      Point2 p = a[0](pt);
      if (region->contains(p)) candidates.push_back(std::move(p));
    }
  }
  std::sort(candidates.begin(), candidates.end());
  for (const auto& p : candidates) {
    std::vector<Address> addrs;
    for (std::size_t j = 0; j < r; ++j) {
      const Address* found = resolve(p, j);
      if (!found) break;
      addrs.push_back(concat(ws[j], *found));
    }
    if (addrs.size() == r) {
      v.kind = VerdictKind::Intersect;
      v.point = p;
      v.addresses = std::move(addrs);
      return v;
    }
  }

  const Refinement ref = refine(ws, b);
  if (ref.emptied) {
    v.kind = VerdictKind::Disjoint;
    v.depth = ref.rounds;
  } else {
    v.reason = ref.capped ? "alive tuple cap " + std::to_string(b.alive_cap) + " reached"
                          : "refine depth " + std::to_string(b.refine_depth) + " exhausted";
  }
  return v;
}

namespace {

bool map_tuple_less(const std::vector<AffineMap>& x, const std::vector<AffineMap>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const AffineMap &p = x[i], &q = y[i];
    for (int c : {cmp(p.a(), q.a()), cmp(p.b(), q.b()), cmp(p.c(), q.c()), cmp(p.d(), q.d()),
                  cmp(p.t().x, q.t().x), cmp(p.t().y, q.t().y)}) {
      if (c != 0) return c < 0;
    }
  }
  return false;
}

}  // namespace

Refinement Oracle::refine(const std::vector<Word>& ws, const Budget& b) const {
  b.check();
  check_tuple(ws);
  const auto& k = spec_.geometric().envelope;
  const std::size_t r = ws.size();
  struct Tuple {
    std::vector<AffineMap> maps;
    std::vector<ConvexPolygon> envs;
    ConvexPolygon region;
  };
  Refinement out;
  std::vector<Tuple> alive;
  {
    Tuple t;
    for (const auto& w : ws) {
      t.maps.push_back(word_map(w));
      t.envs.push_back(map_polygon(t.maps.back(), k));
    }
    if (auto reg = common_region(t.envs)) {
      t.region = *reg;
      alive.push_back(std::move(t));
    }
  }
  auto record = [&](int round) {
    out.regions.clear();
    for (const auto& t : alive) out.regions.push_back(t.region);
    if (alive.empty()) return;
    const auto& first = alive.front().region;
    bool collapsed = first.is_point();
    for (const auto& t : alive) collapsed = collapsed && t.region == first;
    if (collapsed && !out.collapsed_point) {
      out.collapsed_point = first.vertices()[0];
      out.collapse_round = round;
    }
  };
  record(0);
  if (alive.empty()) {
    out.emptied = true;
    return out;
  }
  for (int round = 1; round <= b.refine_depth; ++round) {
    std::vector<Tuple> cur = std::move(alive);
    for (std::size_t c = 0; c < r; ++c) {
      std::vector<Tuple> next;
      for (const auto& t : cur) {
        for (int j = 1; j <= spec_.m; ++j) {
          Tuple child = t;
          child.maps[c] = compose(t.maps[c], maps_[j - 1]);
          child.envs[c] = map_polygon(child.maps[c], k);
          // Other coordinates may still be unrefined; their envelopes contain
          // every refinement, so an empty region here is final.
          auto reg = intersect(t.region, child.envs[c]);
          if (!reg) continue;
          child.region = std::move(*reg);
          next.push_back(std::move(child));
        }
      }
      // Tuples with equal maps have equal futures (envelopes are nested, so
      // the region is the intersection of the current envelopes): keep one.
      std::sort(next.begin(), next.end(),
                [](const Tuple& x, const Tuple& y) { return map_tuple_less(x.maps, y.maps); });
      next.erase(std::unique(next.begin(), next.end(),
                             [](const Tuple& x, const Tuple& y) { return x.maps == y.maps; }),
                 next.end());
      if (next.size() > b.alive_cap) {
        out.capped = true;
        out.rounds = round;
        return out;
      }
      cur = std::move(next);
      if (cur.empty()) break;
    }
    alive = std::move(cur);
    out.rounds = round;
    record(round);
    if (alive.empty()) {
      out.emptied = true;
      return out;
    }
  }
  return out;
}

Membership Oracle::point_in_cell(const Point2& p, const Word& w, const Budget& b) const {
  b.check();
  const AffineMap a = word_map(w);
  if (!a.invertible()) throw UnsupportedError("cell map of " + w.to_string() + " is singular");
  const Point2 q = a.inverse()(p);
  const auto& cert = certificate_points(b.cert_preperiod_max, b.cert_period_max);
  if (cert.count(q)) return Membership::Yes;
  const auto& k = spec_.geometric().envelope;
  if (!k.contains(q)) return Membership::No;
  std::vector<AffineMap> level{AffineMap::identity()};
  for (int d = 1; d <= b.refine_depth; ++d) {
    std::vector<AffineMap> next;
    for (const auto& u : level) {
      for (const auto& h : maps_) {
        AffineMap c = compose(u, h);
        if (map_polygon(c, k).contains(q)) next.push_back(std::move(c));
      }
    }
    if (next.empty()) return Membership::No;
    if (next.size() > b.alive_cap) return Membership::Unknown;
    level = std::move(next);
  }
  return Membership::Unknown;
}

namespace {

Word tail(const Word& w) {
  return Word(w.alphabet(), std::vector<int>(w.symbols().begin() + 1, w.symbols().end()));
}

bool n1_contains(const SymbolicBackend& s, const std::vector<int>& vs) {
  for (const auto& simplex : s.n1) {
    bool all = std::all_of(vs.begin(), vs.end(), [&](int v) {
      return std::find(simplex.begin(), simplex.end(), v) != simplex.end();
    });
    if (all) return true;
  }
  return false;
}

bool symbolic_rec(const SystemSpec& spec, const std::vector<Word>& ws) {
  if (ws.size() == 1) return true;
  const auto& s = spec.symbolic();
  std::vector<int> firsts;
  for (const auto& w : ws) firsts.push_back(w[0]);
  if (ws[0].size() == 1) return n1_contains(s, firsts);
  std::set<int> distinct(firsts.begin(), firsts.end());
  if (distinct.size() == 1) {
    std::vector<Word> rest;
    for (const auto& w : ws) rest.push_back(tail(w));
    return symbolic_rec(spec, rest);
  }
  if (distinct.size() != firsts.size() || !n1_contains(s, firsts)) return false;
  const std::size_t len = ws[0].size() - 1;
  for (std::size_t t = 0; t < ws.size(); ++t) {
    const int other = firsts[t == 0 ? 1 : 0];
    if (truncate(s.addresses.at({firsts[t], other}), len) != tail(ws[t])) return false;
  }
  return true;
}

}  // namespace

bool symbolic_is_simplex(const SystemSpec& spec, const std::vector<Word>& ws) {
  return symbolic_rec(spec, ws);
}

void check_address_consistency(const SystemSpec& spec, int k) {
  if (k < 2) return;
  const auto& s = spec.symbolic();
  const auto len = static_cast<std::size_t>(k - 1);
  for (const auto& simplex : s.n1) {
    for (int i : simplex) {
      std::optional<Word> first;
      int first_other = 0;
      for (int j : simplex) {
        if (j == i) continue;
        Word t = truncate(s.addresses.at({i, j}), len);
        if (!first) {
          first = t;
          first_other = j;
        } else if (t != *first) {
          std::string name;
          for (int v : simplex) name += std::to_string(v);
          throw ValidationError("inconsistent addresses on simplex {" + name + "} at vertex " +
                                std::to_string(i) + ": x(" + std::to_string(i) + "," +
                                std::to_string(first_other) + ") and x(" + std::to_string(i) +
                                "," + std::to_string(j) + ") differ within " +
                                std::to_string(len) + " symbols");
        }
      }
    }
  }
}

SimplicialComplex generate_pu_nerve(const SystemSpec& spec, int k, int max_dim) {
  if (k < 1) throw InputError("depth must be >= 1");
  check_address_consistency(spec, k);
  const auto& s = spec.symbolic();
  const int m = spec.m;
  const SimplicialComplex n1 = symbolic_n1(spec, max_dim);
  SimplicialComplex cur = n1;
  for (int level = 1; level < k; ++level) {
    SimplicialComplex next(m, level + 1, max_dim);
    const Vertex block = static_cast<Vertex>(cur.vertex_count());
    for (int d = 1; d <= max_dim; ++d) {
      for (const auto& simplex : cur.simplices(d)) {
        for (int j = 0; j < m; ++j) {
          Simplex t(simplex);
          for (auto& v : t) v += static_cast<Vertex>(j) * block;
          next.add(std::move(t));
        }
      }
    }
    for (int d = 1; d <= max_dim; ++d) {
      for (const auto& e : n1.simplices(d)) {
        Simplex lift;
        for (std::size_t t = 0; t < e.size(); ++t) {
          const int i = static_cast<int>(e[t]) + 1;
          const int other = static_cast<int>(e[t == 0 ? 1 : 0]) + 1;
          const Word x = truncate(s.addresses.at({i, other}), static_cast<std::size_t>(level));
          lift.push_back(static_cast<Vertex>(e[t]) * block + static_cast<Vertex>(x.index()));
        }
        next.add(std::move(lift));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace icoh
