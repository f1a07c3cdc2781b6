#include "icoh/components.hpp"

#include "icoh/errors.hpp"
#include "icoh/homology.hpp"

namespace icoh {

std::string to_string(ConVerdictKind k) {
  switch (k) {
    case ConVerdictKind::Connected: return "Connected";
    case ConVerdictKind::FinitelyMany: return "FinitelyMany";
    case ConVerdictKind::CountablyInfinitePlus: return "CountablyInfinitePlus";
    case ConVerdictKind::Uncountable: return "Uncountable";
    case ConVerdictKind::InfinitelyMany: return "InfinitelyMany";
    case ConVerdictKind::GrowingUnknown: return "GrowingUnknown";
    case ConVerdictKind::NoVerdict: return "NoVerdict";
  }
  return "?";
}

std::string ConVerdict::label() const {
  switch (kind) {
    case ConVerdictKind::FinitelyMany: return "FinitelyMany(" + std::to_string(value) + ")";
    case ConVerdictKind::Uncountable: return "Uncountable(Sigma_2)";
    case ConVerdictKind::InfinitelyMany: return "infinitely many components";
    default: return to_string(kind);
  }
}

std::vector<std::size_t> ComponentTower::counts() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels) out.push_back(l.count);
  return out;
}

namespace {

ComponentLevel level_of(const SimplicialComplex& c, const Components& comp) {
  ComponentLevel l;
  l.count = comp.count;
  l.sizes.assign(comp.count, 0);
  for (std::size_t label : comp.label) ++l.sizes[label];
  for (Vertex v : comp.representative) l.representatives.push_back(c.vertex_word(v));
  return l;
}

/// Whether the parent map between consecutive levels is a bijection.
bool parent_bijective(const ComponentLevel& child, const ComponentLevel& parent) {
  if (child.count != parent.count) return false;
  std::vector<bool> hit(parent.count, false);
  for (std::size_t p : child.parent) {
    if (hit[p]) return false;
    hit[p] = true;
  }
  return true;
}

ConVerdict verdict_of(const Tower& tower, const ComponentTower& ct, const ComponentFacts& facts,
                      const std::vector<Components>& comps) {
  ConVerdict v;
  const int m = ct.m;
  const auto& counts = ct.levels;
  const int depth = static_cast<int>(counts.size());
  if (!facts.lx_connected) {
    v.note = "every L_x connected is not asserted; counts only";
    return v;
  }
  v.hypothesis = "L_x connected for all x (" + facts.lx_basis + ")";
  const char* base = facts.backward ? "precompojth" : "ssprecompojth";
  if (counts[0].count == 1) {
    v.kind = ConVerdictKind::Connected;
    v.tag = std::string(base) + "2";
    v.note = "N_1 connected";
    return v;
  }
  if (m == 2 && facts.injective_or_backward) {
    v.kind = ConVerdictKind::Uncountable;
    v.tag = std::string(base) + (facts.backward ? "4" : "4-1");
    v.note = "m = 2 and N_1 disconnected: Con(L) is in bijection with Sigma_2";
    return v;
  }
  if (m == 3 && facts.injective_or_backward) {
    v.kind = ConVerdictKind::CountablyInfinitePlus;
    v.tag = std::string(base) + "5";
    v.note = "m = 3 and N_1 disconnected";
    // j^K isolated at the deepest level points at the component L_{(j)^inf}.
    const auto& top = tower.at(depth);
    for (int j = 1; j <= 3; ++j) {
      const Word w(3, std::vector<int>(static_cast<std::size_t>(depth), j));
      const Vertex vx = top.vertex_of(w);
      if (counts.back().sizes[comps.back().label[vx]] == 1) {
        v.isolated_symbol = j;
        break;
      }
    }
    if (v.isolated_symbol) {
      v.note += "; (" + std::to_string(*v.isolated_symbol) + ")^K isolated in N_" +
                std::to_string(depth);
    } else {
      v.note += "; isolating symbol not visible at depth " + std::to_string(depth);
    }
    return v;
  }
  if (facts.postunbranched && facts.injective_or_backward && tower.at(1).max_dim() >= 2) {
    const std::size_t a01 = counts[0].count;
    const std::size_t a11 = betti(tower.at(1), FieldKind::rationals(), 1);
    const std::size_t s1 = static_cast<std::size_t>(m) - a01 + a11;
    for (int k = 0; k < depth; ++k) {
      if (counts[static_cast<std::size_t>(k)].count * static_cast<std::size_t>(m - 1) > s1) {
        v.kind = ConVerdictKind::InfinitelyMany;
        v.tag = "puthm5";
        v.note = "#Con(N_" + std::to_string(k + 1) + ") = " +
                 std::to_string(counts[static_cast<std::size_t>(k)].count) +
                 " exceeds (m - a_{0,1} + a_{1,1})/(m-1) = " + std::to_string(s1) + "/" +
                 std::to_string(m - 1);
        return v;
      }
    }
    if (m <= 6) {
      v.kind = ConVerdictKind::InfinitelyMany;
      v.tag = "puthmless6";
      v.note = "2 <= m <= 6 and N_1 disconnected";
      return v;
    }
  }
  for (int k = depth; k >= 2; --k) {
    const auto& child = counts[static_cast<std::size_t>(k - 1)];
    const auto& parent = counts[static_cast<std::size_t>(k - 2)];
    if (parent_bijective(child, parent)) {
      v.kind = ConVerdictKind::FinitelyMany;
      v.value = child.count;
      v.tag = std::string(base) + "3 (observed)";
      v.note = "counts and parent map stable between levels " + std::to_string(k - 1) + " and " +
               std::to_string(k) + "; not a proof of stabilization";
      return v;
    }
  }
  v.kind = ConVerdictKind::GrowingUnknown;
  v.note = "no stabilization observed and no theorem applies";
  return v;
}

}  // namespace

ComponentTower component_tower(const Tower& tower, const ComponentFacts& facts) {
  if (tower.depth() < 1) throw InputError("empty tower");
  ComponentTower ct;
  ct.m = tower.at(1).alphabet();
  ct.conditional = !tower.certain();
  std::vector<Components> comps;
  for (int k = 1; k <= tower.depth(); ++k) {
    const auto& nk = tower.at(k);
    comps.push_back(connected_components(nk));
    ComponentLevel l = level_of(nk, comps.back());
    if (k > 1) {
      const auto& prev = comps[comps.size() - 2];
      const auto& prev_level = ct.levels.back();
      l.parent.assign(l.count, prev_level.count);
      const std::uint64_t m = static_cast<std::uint64_t>(ct.m);
      std::vector<bool> hit(prev_level.count, false);
      for (std::size_t v = 0; v < nk.vertex_count(); ++v) {
        const std::size_t p = prev.label[v / m];
        auto& slot = l.parent[comps.back().label[v]];
        if (slot != prev_level.count && slot != p) {
          throw ConsistencyError("component of N_" + std::to_string(k) +
                                 " meets two components of N_" + std::to_string(k - 1));
        }
        slot = p;
        hit[p] = true;
      }
      for (bool h : hit) {
        if (!h) throw ConsistencyError("component parent map is not surjective");
      }
      if (l.count < prev_level.count) {
        throw ConsistencyError("component count decreased along the tower");
      }
    }
    ct.levels.push_back(std::move(l));
  }
  ct.verdict = verdict_of(tower, ct, facts, comps);
  return ct;
}

}  // namespace icoh
