#include "icoh/nerve.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>

#include "icoh/errors.hpp"

namespace icoh {

void NerveOptions::check() const {
  if (dim_cap < 1) throw InputError("dim_cap must be >= 1");
  if (threads < 1) throw InputError("threads must be >= 1");
  budget.check();
}

namespace {

/// Runs the oracle on every tuple; results are in input order whatever the
/// thread count.
std::vector<Verdict> query_all(const Oracle& oracle, const std::vector<std::vector<Word>>& tuples,
                               const NerveOptions& opt) {
  std::vector<Verdict> out(tuples.size());
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(opt.threads), std::max<std::size_t>(1, tuples.size()));
  auto run = [&](std::size_t begin) {
    for (std::size_t i = begin; i < tuples.size(); i += workers) {
      out[i] = oracle.cells_intersect(tuples[i], opt.budget);
    }
  };
  if (workers <= 1) {
    run(0);
    return out;
  }
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        run(t);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

std::vector<Word> words_of(const SimplicialComplex& c, const Simplex& s) {
  std::vector<Word> out;
  for (Vertex v : s) out.push_back(c.vertex_word(v));
  return out;
}

Nerve build_geometric(const Oracle& oracle, int k, const NerveOptions& opt) {
  const int m = oracle.spec().m;
  const int top = opt.dim_cap + 1;
  Nerve out{SimplicialComplex(m, k, top), {}, 0};
  SimplicialComplex& c = out.complex;
  const std::size_t n = c.vertex_count();

  // Envelope bounding boxes, level by level.
  const auto& env = oracle.spec().geometric().envelope;
  const auto maps = cell_maps(oracle.spec());
  std::vector<AffineMap> level_maps{AffineMap::identity()};
  for (int l = 1; l <= k; ++l) {
    std::vector<AffineMap> next;
    next.reserve(level_maps.size() * static_cast<std::size_t>(m));
    for (const auto& u : level_maps) {
      for (const auto& h : maps) next.push_back(compose(u, h));
    }
    level_maps = std::move(next);
  }
  std::vector<ConvexPolygon> envelopes(n);
  std::vector<ConvexPolygon::Box> boxes(n);
  for (std::size_t v = 0; v < n; ++v) {
    envelopes[v] = map_polygon(level_maps[v], env);
    boxes[v] = envelopes[v].bounds();
  }

  // Sweep over x to find box-overlapping pairs, then exact envelope test.
  std::vector<Vertex> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<Vertex>(v);
  std::sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return boxes[a].xmin < boxes[b].xmin; });
  std::vector<Simplex> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& bi = boxes[order[i]];
    for (std::size_t j = i + 1; j < n && boxes[order[j]].xmin <= bi.xmax; ++j) {
      const auto& bj = boxes[order[j]];
      if (bj.ymin > bi.ymax || bi.ymin > bj.ymax) continue;
      if (!intersect(envelopes[order[i]], envelopes[order[j]])) continue;
      pairs.push_back({std::min(order[i], order[j]), std::max(order[i], order[j])});
    }
  }
  std::sort(pairs.begin(), pairs.end());

  auto process = [&](const std::vector<Simplex>& cands) {
    std::vector<std::vector<Word>> tuples;
    tuples.reserve(cands.size());
    for (const auto& s : cands) tuples.push_back(words_of(c, s));
    const auto verdicts = query_all(oracle, tuples, opt);
    out.oracle_calls += cands.size();
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (verdicts[i].kind == VerdictKind::Intersect) {
        c.add(cands[i]);
      } else if (verdicts[i].kind == VerdictKind::Unknown) {
        out.uncertain.push_back({tuples[i], verdicts[i].reason});
      }
    }
  };
  process(pairs);

  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& e : c.simplices(1)) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  // Clique extension: sigma + {v} with v > max(sigma) is a candidate when all
  // of its facets are already simplices; each candidate is verified.
  for (int d = 1; d < top; ++d) {
    std::vector<Simplex> cands;
    for (const auto& s : c.simplices(d)) {
      for (Vertex v : adj[s.back()]) {
        if (v <= s.back()) continue;
        Simplex t = s;
        t.push_back(v);
        bool ok = true;
        for (std::size_t drop = 0; drop + 1 < t.size() && ok; ++drop) {
          Simplex f = t;
          f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
          ok = c.contains(f);
        }
        if (ok) cands.push_back(std::move(t));
      }
    }
    if (cands.empty()) break;
    process(cands);
  }
  return out;
}

}  // namespace

Nerve build_nerve(const Oracle& oracle, int k, const NerveOptions& opt) {
  opt.check();
  if (k < 1) throw InputError("depth must be >= 1");
  const auto& spec = oracle.spec();
  word_count(spec.m, static_cast<std::size_t>(k), opt.vertex_cap);  // resource check
  const int top = opt.dim_cap + 1;
  if (spec.is_table()) {
    if (k > table_depth(spec)) {
      throw InputError("table system '" + spec.name + "' stores levels up to " +
                       std::to_string(table_depth(spec)) + ", requested " + std::to_string(k));
    }
    return {table_level(spec, k, top), {}, 0};
  }
  if (spec.is_symbolic()) return {generate_pu_nerve(spec, k, top), {}, 0};
  return build_geometric(oracle, k, opt);
}

Tower build_tower(const Oracle& oracle, int max_depth, const NerveOptions& opt) {
  if (max_depth < 1) throw InputError("max depth must be >= 1");
  Tower t;
  for (int k = 1; k <= max_depth; ++k) {
    Nerve nk = build_nerve(oracle, k, opt);
    t.levels.push_back(std::move(nk.complex));
    t.oracle_calls += nk.oracle_calls;
    for (auto& u : nk.uncertain) t.uncertain.push_back(std::move(u));
  }
  return t;
}

}  // namespace icoh
