#include "icoh/classify.hpp"

#include <set>

#include "icoh/errors.hpp"

namespace icoh {

bool TheoremCheck::all_hold() const { return first_failure() == nullptr; }

const Condition* TheoremCheck::first_failure() const {
  for (const auto& c : hypotheses) {
    if (!c.holds) return &c;
  }
  for (const auto& c : conditions) {
    if (!c.holds) return &c;
  }
  return nullptr;
}

std::string to_string(PUKind k) {
  switch (k) {
    case PUKind::PostunbranchedUpTo: return "PostunbranchedUpTo";
    case PUKind::NotPostunbranched: return "NotPostunbranched";
    case PUKind::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(OverlapKind k) {
  switch (k) {
    case OverlapKind::EmptyCertified: return "EmptyCertified";
    case OverlapKind::SingletonCertified: return "SingletonCertified";
    case OverlapKind::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

Word letter(int m, int j) { return Word(m, {j}); }

Overlap overlap_of(const Oracle& oracle, int i, int j, const Budget& b) {
  const int m = oracle.spec().m;
  Overlap o{i, j, OverlapKind::Unknown, std::nullopt, {}};
  const std::vector<Word> ws{letter(m, i), letter(m, j)};
  const Verdict v = oracle.cells_intersect(ws, b);
  if (v.kind == VerdictKind::Disjoint) {
    o.kind = OverlapKind::EmptyCertified;
    o.note = "disjoint at refinement depth " + std::to_string(v.depth);
    return o;
  }
  if (v.kind == VerdictKind::Unknown) {
    o.note = "intersection undecided: " + v.reason;
    return o;
  }
  o.point = v.point;
  const Refinement ref = oracle.refine(ws, b);
  if (ref.collapsed_point && *ref.collapsed_point == *v.point) {
    o.kind = OverlapKind::SingletonCertified;
    o.note = "all refinement regions equal " + to_string(*v.point) + " from round " +
             std::to_string(ref.collapse_round);
  } else {
    o.note = "refinement regions did not collapse to a point within depth " +
             std::to_string(b.refine_depth);
  }
  return o;
}

/// Distinct points c_i(q) of certificate points q that certainly lie in cell j.
std::vector<Point2> certified_overlap_points(const Oracle& oracle, int i, int j,
                                             const Budget& b) {
  const int m = oracle.spec().m;
  const AffineMap ci = oracle.word_map(letter(m, i));
  std::set<Point2> out;
  for (const auto& [q, addr] : oracle.certificate_points(b.cert_preperiod_max, b.cert_period_max)) {
    Point2 p = ci(q);
    if (out.count(p)) continue;
    if (oracle.point_in_cell(p, letter(m, j), b) == Membership::Yes) out.insert(std::move(p));
    if (out.size() >= 2) break;
  }
  return {out.begin(), out.end()};
}

/// Depth-by-depth cells containing p; stops early on ambiguity.
void trace_address(const Oracle& oracle, PUPair& pair, int depth, const Budget& b) {
  const int m = oracle.spec().m;
  std::vector<Word> cur{Word(m)};
  for (int d = 1; d <= depth; ++d) {
    std::vector<Word> next;
    bool unknown = false;
    for (const auto& u : cur) {
      for (int s = 1; s <= m; ++s) {
        Word w = u.extended(s);
        switch (oracle.point_in_cell(*pair.pulled, w, b)) {
          case Membership::Yes: next.push_back(std::move(w)); break;
          case Membership::Unknown: unknown = true; break;
          case Membership::No: break;
        }
      }
    }
    if (next.size() > 1) {
      pair.prefixes = next;
      pair.note = "pullback " + to_string(*pair.pulled) + " lies in cells " + next[0].to_string() +
                  " and " + next[1].to_string();
      return;
    }
    if (unknown) {
      pair.prefixes = next;
      pair.note = "membership of " + to_string(*pair.pulled) + " undecided at depth " +
                  std::to_string(d);
      return;
    }
    if (next.empty()) {
      throw ConsistencyError("pullback " + to_string(*pair.pulled) + " lies in no cell");
    }
    cur = std::move(next);
  }
  pair.prefixes = cur;
  pair.passes = true;
  pair.note = "unique address prefix " + cur[0].to_string();
}

PUReport geometric_pu(const Oracle& oracle, int depth, const Budget& b) {
  const int m = oracle.spec().m;
  PUReport rep;
  rep.depth = depth;
  rep.basis = "geometric check to depth " + std::to_string(depth);
  std::optional<std::pair<int, int>> unknown_pair;
  std::string unknown_note;
  auto fail = [&](int i, int j, std::string note) {
    if (!rep.witness || rep.kind != PUKind::NotPostunbranched) {
      rep.kind = PUKind::NotPostunbranched;
      rep.witness = std::make_pair(i, j);
      rep.witness_note = std::move(note);
    }
  };
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      const Overlap o = overlap_of(oracle, i, j, b);
      if (o.kind == OverlapKind::EmptyCertified) {
        for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
          rep.pairs.push_back({x, y, true, std::nullopt, std::nullopt, {}, true, o.note});
        }
        continue;
      }
      if (o.kind == OverlapKind::Unknown) {
        const auto pts = o.point ? certified_overlap_points(oracle, i, j, b) : std::vector<Point2>{};
        PUPair pair{i, j, false, o.point, std::nullopt, {}, false, o.note};
        if (pts.size() >= 2) {
          pair.note = "C_{" + std::to_string(i) + "," + std::to_string(j) + "} contains " +
                      to_string(pts[0]) + " and " + to_string(pts[1]);
          fail(i, j, pair.note);
        } else if (!unknown_pair) {
          unknown_pair = std::make_pair(i, j);
          unknown_note = o.note;
        }
        rep.pairs.push_back(std::move(pair));
        continue;
      }
      for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
        PUPair pair{x, y, false, o.point, std::nullopt, {}, false, {}};
        pair.pulled = oracle.word_map(letter(m, x)).inverse()(*o.point);
        trace_address(oracle, pair, depth, b);
        if (!pair.passes) {
          if (pair.prefixes.size() > 1) {
            fail(x, y, pair.note);
          } else if (!unknown_pair) {
            unknown_pair = std::make_pair(x, y);
            unknown_note = pair.note;
          }
        }
        rep.pairs.push_back(std::move(pair));
      }
    }
  }
  if (rep.kind == PUKind::NotPostunbranched) return rep;
  if (unknown_pair) {
    rep.kind = PUKind::Unknown;
    rep.witness = unknown_pair;
    rep.witness_note = unknown_note;
    return rep;
  }
  rep.kind = PUKind::PostunbranchedUpTo;
  return rep;
}

std::string eq(const std::string& lhs, long long l, const std::string& rhs, long long r) {
  return lhs + " = " + std::to_string(l) + (l == r ? " = " : " != ") + rhs + " = " +
         std::to_string(r);
}

std::string a_name(int r, int k) {
  return "a_{" + std::to_string(r) + "," + std::to_string(k) + "}";
}

}  // namespace

PUReport check_postunbranched(const Oracle& oracle, int depth, const Budget& b) {
  if (depth < 1) throw InputError("postunbranched depth must be >= 1");
  b.check();
  const auto& spec = oracle.spec();
  if (spec.is_geometric()) return geometric_pu(oracle, depth, b);
  PUReport rep;
  rep.depth = depth;
  if (spec.is_symbolic()) {
    check_address_consistency(spec, depth);
    rep.kind = PUKind::PostunbranchedUpTo;
    rep.basis = "symbolic backend: one address per pair, consistent to depth " +
                std::to_string(depth);
    for (const auto& [ij, addr] : spec.symbolic().addresses) {
      PUPair p{ij.first, ij.second, false, std::nullopt, std::nullopt,
               {truncate(addr, static_cast<std::size_t>(depth))}, true,
               "x = " + addr.to_string()};
      rep.pairs.push_back(std::move(p));
    }
    return rep;
  }
  rep.kind = PUKind::Unknown;
  rep.basis = "table systems carry no geometry to check";
  return rep;
}

std::vector<Overlap> check_singleton_overlaps(const Oracle& oracle, const Budget& b) {
  if (!oracle.spec().is_geometric()) {
    throw UnsupportedError("singleton overlaps need a geometric system");
  }
  b.check();
  std::vector<Overlap> out;
  const int m = oracle.spec().m;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) out.push_back(overlap_of(oracle, i, j, b));
  }
  return out;
}

bool all_singleton(const std::vector<Overlap>& overlaps) {
  for (const auto& o : overlaps) {
    if (o.kind == OverlapKind::Unknown) return false;
  }
  return true;
}

TheoremCheck check_h1_infinite_conditions(const SimplicialComplex& n1,
                                          const SimplicialComplex& n2, int pivot,
                                          bool backward, bool injective) {
  if (n1.level() != 1 || n2.level() != 2) throw InputError("need N_1 and N_2");
  if (n1.alphabet() != n2.alphabet()) throw InputError("N_1 and N_2 alphabets differ");
  if (n1.max_dim() < 2) throw InputError("N_1 must be stored through dimension 2");
  const int m = n1.alphabet();
  if (pivot < 1 || pivot > m) throw InputError("pivot out of range");
  TheoremCheck t;
  t.theorem = backward ? "preicmainthm" : "sspreicmainthm";
  const std::string p = std::to_string(pivot);
  if (!backward) {
    t.hypotheses.push_back({"injective generators", injective,
                            injective ? "in force" : "not established"});
  }

  const auto comp = connected_components(n1);
  t.conditions.push_back({"1: |N_1| connected", comp.count == 1,
                          std::to_string(comp.count) + " component(s)"});

  const Vertex pp = n2.vertex_of(Word(m, {pivot, pivot}));
  Condition c2{"2: cell " + p + p + " meets no other first-level cell", true,
               "(" + p + p + ") has edges only inside block " + p};
  for (const auto& e : n2.simplices(1)) {
    if (e[0] != pp && e[1] != pp) continue;
    const Word other = n2.vertex_word(e[0] == pp ? e[1] : e[0]);
    if (other[0] != pivot) {
      c2.holds = false;
      c2.witness = "edge " + p + p + "-" + other.to_string();
      break;
    }
  }
  t.conditions.push_back(c2);

  auto edge = [&](int a, int b) {
    return n1.contains({static_cast<Vertex>(std::min(a, b) - 1), static_cast<Vertex>(std::max(a, b) - 1)});
  };
  Condition c3{"3: 3-cycle through " + p + " in N_1", false, "none"};
  for (int a = 1; a <= m && !c3.holds; ++a) {
    for (int b = a + 1; b <= m && !c3.holds; ++b) {
      if (a == pivot || b == pivot) continue;
      if (edge(pivot, a) && edge(a, b) && edge(b, pivot)) {
        c3.holds = true;
        c3.witness = p + "-" + std::to_string(a) + "-" + std::to_string(b);
      }
    }
  }
  t.conditions.push_back(c3);

  Condition c4{"4: no 2-simplex of N_1 contains " + p, true, "none"};
  for (const auto& s : n1.simplices(2)) {
    for (Vertex v : s) {
      if (static_cast<int>(v) + 1 == pivot) {
        c4.holds = false;
        c4.witness = "{" + std::to_string(s[0] + 1) + "," + std::to_string(s[1] + 1) + "," +
                     std::to_string(s[2] + 1) + "}";
      }
    }
    if (!c4.holds) break;
  }
  t.conditions.push_back(c4);

  if (t.all_hold()) {
    t.conclusions.push_back("dim_R H^1 = infinity");
    t.conclusions.push_back("a_{1,k} strictly increasing in k");
  }
  return t;
}

TheoremCheck verify_puthm(const BettiTable& table, int m, bool n1_connected) {
  TheoremCheck t;
  t.theorem = "puthm";
  const int depth = table.depth();
  const long long M = m;
  auto a = [&](int r, int k) { return static_cast<long long>(table.at(r, k)); };
  auto lam = [&](int k) { return static_cast<long long>(*table.lambda.at(static_cast<std::size_t>(k - 1))); };
  const long long a01 = a(0, 1), a11 = a(1, 1);
  const long long s1 = M - a01 + a11;
  const std::string ms = std::to_string(m);

  for (int k = 1; k < depth; ++k) {
    const std::string ks = std::to_string(k);
    for (int r = 2; r <= table.dim_cap; ++r) {
      const long long rhs = M * a(r, k) + a(r, 1);
      t.conditions.push_back({"puthm1 r=" + std::to_string(r) + " k=" + ks, a(r, k + 1) == rhs,
                              eq(a_name(r, k + 1), a(r, k + 1),
                                 ms + "*" + std::to_string(a(r, k)) + " + " + std::to_string(a(r, 1)), rhs)});
    }
    if (n1_connected) {
      const long long rhs = M * a(1, k) + a11;
      t.conditions.push_back({"puthm7b k=" + ks, a(1, k + 1) == rhs,
                              eq(a_name(1, k + 1), a(1, k + 1),
                                 ms + "*" + std::to_string(a(1, k)) + " + " + std::to_string(a11), rhs)});
    }
    {
      const long long rhs = M * a(1, k) + lam(k + 1);
      t.conditions.push_back({"puthmakvalues1 a_1 k=" + ks, a(1, k + 1) == rhs,
                              eq(a_name(1, k + 1), a(1, k + 1),
                                 ms + "*" + std::to_string(a(1, k)) + " + " + std::to_string(lam(k + 1)), rhs)});
    }
    {
      const long long rhs = M * a(0, k) - M + a01 - a11 + lam(k + 1);
      t.conditions.push_back({"puthmakvalues1 a_0 k=" + ks, a(0, k + 1) == rhs,
                              eq(a_name(0, k + 1), a(0, k + 1), "m a_{0,k} - m + a_{0,1} - a_{1,1} + lambda", rhs)});
    }
    {
      const long long rhs = M * a(0, k) - M + a01 - a11 - M * a(1, k) + a(1, k + 1);
      t.conditions.push_back({"puthm3 k=" + ks, a(0, k + 1) == rhs,
                              eq(a_name(0, k + 1), a(0, k + 1),
                                 "m a_{0,k} - m + a_{0,1} - a_{1,1} - m a_{1,k} + a_{1,k+1}", rhs)});
    }
    {
      const long long lo = M * a(1, k), hi = M * a(1, k) + a11, v = a(1, k + 1);
      t.conditions.push_back({"puthmakvalues2 k=" + ks, lo <= v && v <= hi,
                              std::to_string(lo) + " <= " + a_name(1, k + 1) + " = " +
                                  std::to_string(v) + " <= " + std::to_string(hi)});
    }
    {
      const long long lo = M * a(0, k) - M + a01 - a11, hi = M * a(0, k) - M + a01, v = a(0, k + 1);
      t.conditions.push_back({"puthm4 k=" + ks, lo <= v && v <= hi,
                              std::to_string(lo) + " <= " + a_name(0, k + 1) + " = " +
                                  std::to_string(v) + " <= " + std::to_string(hi)});
    }
  }
  for (int k = 2; k <= depth; ++k) {
    const long long upper = k == 2 ? a11 : lam(k - 1);
    const std::string bound = k == 2 ? "a_{1,1}" : "lambda_" + std::to_string(k - 1);
    t.conditions.push_back({"puthmlambda k=" + std::to_string(k), lam(k) <= upper,
                            "lambda_" + std::to_string(k) + " = " + std::to_string(lam(k)) +
                                " <= " + bound + " = " + std::to_string(upper)});
  }
  for (int r = 2; r <= table.dim_cap; ++r) {
    if (a(r, 1) != 0) continue;
    bool zero = true;
    for (int k = 1; k <= depth; ++k) zero = zero && a(r, k) == 0;
    t.conditions.push_back({"puthmcohsupp(a) r=" + std::to_string(r), zero,
                            zero ? "a_{r,k} = 0 on all levels" : "nonzero a_{r,k} with a_{r,1} = 0"});
  }
  if (m >= 2) {
    for (int k0 = 1; k0 <= depth; ++k0) {
      if (a(0, k0) * (M - 1) <= s1) continue;
      bool growing = true;
      for (int k = k0; k < depth; ++k) growing = growing && a(0, k + 1) > a(0, k);
      t.conditions.push_back({"puthm5 k0=" + std::to_string(k0), growing,
                              growing ? "a_{0,k} strictly increasing from k0"
                                      : "a_{0,k} not strictly increasing from k0"});
      break;
    }
  }

  if (!t.all_hold()) return t;
  t.conclusions.push_back("dim H^1(S_1) = m - a_{0,1} + a_{1,1} = " + std::to_string(s1));
  if (depth >= 2 && lam(2) == 0) t.conclusions.push_back("B_2 = 0, so H^1 = 0 (puthmB2zero)");
  if (n1_connected) {
    t.conclusions.push_back(a11 == 0 ? "a_{1,inf} = 0 (puthm7c)" : "a_{1,inf} = infinity (puthm7c)");
  } else {
    t.conclusions.push_back("a_{1,inf} is 0 or infinity (puthmavalues)");
  }
  for (int r = 2; r <= table.dim_cap; ++r) {
    t.conclusions.push_back(a(r, 1) == 0 ? "H^" + std::to_string(r) + " = 0 (puthmcohsupp)"
                                         : "a_{" + std::to_string(r) + ",inf} = infinity (puthmcohsupp)");
  }
  if (m >= 2) {
    const long long hi = s1 / (M - 1);
    if (hi < a01) {
      t.conclusions.push_back("a_{0,inf} = infinity (puthm6: empty finite range)");
    } else {
      t.conclusions.push_back("a_{0,inf} in [" + std::to_string(a01) + ", " + std::to_string(hi) +
                              "] or infinity (puthm6)");
    }
    if (s1 % (M - 1) != 0) {
      t.conclusions.push_back("a_{0,inf} or a_{1,inf} is infinity (puthm9)");
    }
    if (m <= 6 && !n1_connected) {
      t.conclusions.push_back("a_{0,inf} = infinity and infinitely many components (puthmless6)");
    }
  }
  if (depth >= 2) {
    t.conclusions.push_back("b_{1,inf} <= lambda_" + std::to_string(depth) + " = " +
                            std::to_string(lam(depth)) + " (puthmlambda)");
  }
  return t;
}

TheoremCheck verify_sscij1(const BettiTable& table, int m) {
  TheoremCheck t;
  t.theorem = "sscij1thm";
  for (int k = 1; k <= table.depth(); ++k) {
    for (int r = 2; r <= table.dim_cap; ++r) {
      t.conditions.push_back({"sscij1thm(1) r=" + std::to_string(r) + " k=" + std::to_string(k),
                              table.at(r, k) == 0,
                              a_name(r, k) + " = " + std::to_string(table.at(r, k))});
    }
    if (k < table.depth()) {
      const std::size_t lo = static_cast<std::size_t>(m) * table.at(1, k);
      t.conditions.push_back({"sscij1thm(2) k=" + std::to_string(k), lo <= table.at(1, k + 1),
                              std::to_string(m) + "*" + std::to_string(table.at(1, k)) + " <= " +
                                  a_name(1, k + 1) + " = " + std::to_string(table.at(1, k + 1))});
    }
  }
  return t;
}

EffectiveFacts effective_facts(const Oracle& oracle, const PUReport* pu) {
  const auto& spec = oracle.spec();
  const auto& asserted = spec.facts;
  EffectiveFacts f;
  f.backward = spec.orientation == Orientation::Backward;

  if (asserted.injective) {
    f.injective = *asserted.injective;
    f.injective_basis = "asserted";
  } else if (spec.is_geometric()) {
    f.injective = true;
    for (const auto& h : spec.geometric().maps) f.injective = f.injective && h.invertible();
    f.injective_basis = f.injective ? "invertible affine generators" : "singular generator";
  } else {
    f.injective_basis = "not asserted";
  }

  if (asserted.lx_connected) {
    f.lx_connected = *asserted.lx_connected;
    f.lx_basis = "asserted";
  } else if (spec.is_geometric()) {
    f.lx_connected = true;
    f.lx_basis = "contracting cell maps: every L_x is a point";
  } else {
    f.lx_basis = "not asserted";
  }

  if (asserted.postunbranched) {
    f.postunbranched = *asserted.postunbranched;
    f.pu_basis = "asserted";
  } else if (spec.is_symbolic()) {
    f.postunbranched = true;
    f.pu_basis = "symbolic backend";
  } else if (pu && pu->kind == PUKind::PostunbranchedUpTo) {
    f.postunbranched = true;
    f.pu_basis = pu->basis;
  } else {
    f.pu_basis = pu ? "check: " + to_string(pu->kind) : "not checked";
  }

  if (asserted.common_fixed_point) {
    f.common_fixed_point = *asserted.common_fixed_point;
    f.cfp_basis = "asserted";
  } else if (spec.is_geometric()) {
    const auto maps = cell_maps(spec);
    const Point2 z = fixed_point(maps.front());
    bool common = true;
    for (const auto& c : maps) common = common && c(z) == z;
    f.common_fixed_point = common;
    f.cfp_basis = common ? "all generators fix " + to_string(z) : "no common fixed point";
  } else {
    f.cfp_basis = "not asserted";
  }
  return f;
}

ComponentFacts component_facts(const EffectiveFacts& f) {
  ComponentFacts c;
  c.lx_connected = f.lx_connected;
  c.lx_basis = f.lx_basis;
  c.injective_or_backward = f.injective || f.backward;
  c.postunbranched = f.postunbranched;
  c.backward = f.backward;
  return c;
}

TheoremCheck best_h1_check(const EffectiveFacts& f, const Tower& tower) {
  if (tower.depth() < 2) throw InputError("the H^1 conditions need N_1 and N_2");
  const int m = tower.at(1).alphabet();
  std::optional<TheoremCheck> first;
  for (int p = 1; p <= m; ++p) {
    auto t = check_h1_infinite_conditions(tower.at(1), tower.at(2), p, f.backward, f.injective);
    if (t.all_hold()) return t;
    if (!first) first = std::move(t);
  }
  return *first;
}

TowerFacts tower_facts(const EffectiveFacts& f, const Tower& tower) {
  TowerFacts t;
  t.postunbranched = f.postunbranched;
  t.postunbranched_basis = f.pu_basis;
  t.injective_or_backward = f.injective || f.backward;
  t.common_fixed_point = f.common_fixed_point;
  if (tower.depth() >= 2 && tower.at(1).max_dim() >= 2) {
    const auto check = best_h1_check(f, tower);
    t.h1_infinite_conditions = check.all_hold();
    t.h1_infinite_tag = check.theorem;
  }
  return t;
}

}  // namespace icoh
