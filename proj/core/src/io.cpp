#include "icoh/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "icoh/errors.hpp"

namespace icoh {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

Rational rational_field(const json& j) {
  if (!j.is_string()) throw InputError("rationals must be \"p/q\" strings, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

Point2 point_field(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("points are [x, y] pairs");
  return {rational_field(j[0]), rational_field(j[1])};
}

Word word_field(int m, const json& j) {
  if (j.is_string()) return Word::parse(m, j.get<std::string>());
  if (j.is_array()) {
    std::vector<int> symbols;
    for (const auto& s : j) {
      if (!s.is_number_integer()) throw InputError("word symbols must be integers");
      symbols.push_back(s.get<int>());
    }
    return Word(m, std::move(symbols));
  }
  throw InputError("words are strings or integer arrays, got " + j.dump());
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

GeometricBackend parse_geometric(const json& b) {
  GeometricBackend g;
  for (const auto& mj : require(b, "maps")) {
    const auto& mat = require(mj, "matrix");
    if (!mat.is_array() || mat.size() != 2 || mat[0].size() != 2 || mat[1].size() != 2) {
      throw InputError("matrix must be 2x2");
    }
    g.maps.emplace_back(rational_field(mat[0][0]), rational_field(mat[0][1]),
                        rational_field(mat[1][0]), rational_field(mat[1][1]),
                        point_field(require(mj, "translation")));
  }
  std::vector<Point2> pts;
  for (const auto& p : require(b, "envelope")) pts.push_back(point_field(p));
  if (pts.empty()) throw InputError("envelope needs at least one point");
  g.envelope = ConvexPolygon::hull(std::move(pts));
  return g;
}

TableBackend parse_table(int m, const json& b) {
  TableBackend t;
  const auto& levels = require(b, "levels");
  if (!levels.is_object()) throw InputError("levels must be an object keyed by depth");
  for (const auto& [key, simplices] : levels.items()) {
    int level = 0;
    try {
      level = std::stoi(key);
    } catch (const std::exception&) {
      throw InputError("bad level key '" + key + "'");
    }
    auto& out = t.levels[level];
    for (const auto& s : simplices) {
      std::vector<Word> ws;
      for (const auto& w : s) ws.push_back(word_field(m, w));
      out.push_back(std::move(ws));
    }
  }
  return t;
}

SymbolicBackend parse_symbolic(int m, const json& b) {
  SymbolicBackend s;
  for (const auto& simplex : require(b, "n1")) s.n1.push_back(simplex.get<std::vector<int>>());
  const auto& addrs = require(b, "addresses");
  if (!addrs.is_object()) throw InputError("addresses must be an object keyed by \"i,j\"");
  for (const auto& [key, a] : addrs.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw InputError("address key '" + key + "' is not \"i,j\"");
    int i = 0, j = 0;
    try {
      i = std::stoi(key.substr(0, comma));
      j = std::stoi(key.substr(comma + 1));
    } catch (const std::exception&) {
      throw InputError("address key '" + key + "' is not \"i,j\"");
    }
    const Word pre = a.contains("pre") ? word_field(m, a.at("pre")) : Word(m);
    s.addresses.emplace(std::make_pair(i, j), Address(pre, word_field(m, require(a, "per"))));
  }
  return s;
}

template <class J = json>
J word_list(const std::vector<Word>& ws) {
  J out = J::array();
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

json simplex_words(const SimplicialComplex& c, const Simplex& s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(c.vertex_word(v).to_string());
  return out;
}

json condition_json(const Condition& c) {
  return {{"id", c.id}, {"holds", c.holds}, {"witness", c.witness}};
}

json check_json(const TheoremCheck& t) {
  json j;
  j["theorem"] = t.theorem;
  j["hypotheses"] = json::array();
  for (const auto& c : t.hypotheses) j["hypotheses"].push_back(condition_json(c));
  j["conditions"] = json::array();
  for (const auto& c : t.conditions) j["conditions"].push_back(condition_json(c));
  j["all_hold"] = t.all_hold();
  j["conclusions"] = t.conclusions;
  return j;
}

json uncertain_json(const std::vector<UncertainSimplex>& uncertain) {
  json out = json::array();
  for (const auto& u : uncertain) out.push_back({{"words", word_list(u.words)}, {"reason", u.reason}});
  return out;
}

json components_json(const ComponentTower& ct) {
  json j;
  j["counts"] = ct.counts();
  j["levels"] = json::array();
  for (std::size_t k = 0; k < ct.levels.size(); ++k) {
    const auto& l = ct.levels[k];
    json lv;
    lv["k"] = k + 1;
    lv["count"] = l.count;
    lv["representatives"] = word_list(l.representatives);
    lv["sizes"] = l.sizes;
    if (!l.parent.empty()) lv["parent"] = l.parent;
    j["levels"].push_back(std::move(lv));
  }
  const auto& v = ct.verdict;
  j["verdict"] = {{"kind", to_string(v.kind)}, {"label", v.label()},    {"tag", v.tag},
                  {"hypothesis", v.hypothesis},   {"note", v.note}};
  if (v.kind == ConVerdictKind::FinitelyMany) j["verdict"]["value"] = v.value;
  if (v.isolated_symbol) j["verdict"]["isolated_symbol"] = *v.isolated_symbol;
  j["conditional"] = ct.conditional;
  return j;
}

json facts_json(const EffectiveFacts& f) {
  return {{"orientation", f.backward ? "backward" : "forward"},
          {"injective", {{"value", f.injective}, {"basis", f.injective_basis}}},
          {"lx_connected", {{"value", f.lx_connected}, {"basis", f.lx_basis}}},
          {"postunbranched", {{"value", f.postunbranched}, {"basis", f.pu_basis}}},
          {"common_fixed_point", {{"value", f.common_fixed_point}, {"basis", f.cfp_basis}}}};
}

}  // namespace

SystemSpec parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("spec is not valid JSON: ") + e.what());
  }
  SystemSpec spec;
  try {
    spec.name = require(doc, "name").get<std::string>();
    const auto orient = doc.value("orientation", std::string("forward"));
    if (orient == "forward") {
      spec.orientation = Orientation::Forward;
    } else if (orient == "backward") {
      spec.orientation = Orientation::Backward;
    } else {
      throw InputError("orientation must be forward or backward");
    }
    spec.m = require(doc, "m").get<int>();
    if (spec.m < 1) throw InputError("m must be >= 1");
    const auto& b = require(doc, "backend");
    const auto kind = require(b, "kind").get<std::string>();
    if (kind == "geometric") {
      spec.backend = parse_geometric(b);
    } else if (kind == "table") {
      spec.backend = parse_table(spec.m, b);
    } else if (kind == "symbolicPU") {
      spec.backend = parse_symbolic(spec.m, b);
    } else {
      throw InputError("unknown backend kind '" + kind + "'");
    }
    if (doc.contains("facts")) {
      const auto& f = doc.at("facts");
      auto opt = [&](const char* key, std::optional<bool>& out) {
        if (f.contains(key)) out = f.at(key).get<bool>();
      };
      opt("injective", spec.facts.injective);
      opt("lx_connected", spec.facts.lx_connected);
      opt("postunbranched", spec.facts.postunbranched);
      opt("common_fixed_point", spec.facts.common_fixed_point);
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed spec: ") + e.what());
  }
  validate(spec);
  return spec;
}

SystemSpec load_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read spec file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

std::string spec_to_json(const SystemSpec& spec) {
  ojson doc;
  doc["name"] = spec.name;
  doc["orientation"] = spec.orientation == Orientation::Forward ? "forward" : "backward";
  doc["m"] = spec.m;
  ojson b;
  b["kind"] = backend_name(spec);
  if (spec.is_geometric()) {
    const auto& g = spec.geometric();
    b["maps"] = ojson::array();
    for (const auto& h : g.maps) {
      ojson mj;
      mj["matrix"] = ojson::array({ojson::array({to_string(h.a()), to_string(h.b())}),
                                   ojson::array({to_string(h.c()), to_string(h.d())})});
      mj["translation"] = ojson::array({to_string(h.t().x), to_string(h.t().y)});
      b["maps"].push_back(std::move(mj));
    }
    b["envelope"] = ojson::array();
    for (const auto& p : g.envelope.vertices()) b["envelope"].push_back(ojson::array({to_string(p.x), to_string(p.y)}));
  } else if (spec.is_table()) {
    ojson levels = ojson::object();
    for (const auto& [level, simplices] : spec.table().levels) {
      ojson arr = ojson::array();
      for (const auto& s : simplices) arr.push_back(word_list<ojson>(s));
      levels[std::to_string(level)] = std::move(arr);
    }
    b["levels"] = std::move(levels);
  } else {
    const auto& s = spec.symbolic();
    b["n1"] = s.n1;
    ojson addrs = ojson::object();
    for (const auto& [ij, a] : s.addresses) {
      addrs[std::to_string(ij.first) + "," + std::to_string(ij.second)] = ojson{
          {"pre", a.preperiod().symbols()}, {"per", a.period().symbols()}};
    }
    b["addresses"] = std::move(addrs);
  }
  doc["backend"] = std::move(b);
  ojson facts = ojson::object();
  auto put = [&](const char* key, const std::optional<bool>& v) {
    if (v) facts[key] = *v;
  };
  put("injective", spec.facts.injective);
  put("lx_connected", spec.facts.lx_connected);
  put("postunbranched", spec.facts.postunbranched);
  put("common_fixed_point", spec.facts.common_fixed_point);
  if (!facts.empty()) doc["facts"] = std::move(facts);
  return doc.dump(2) + "\n";
}

std::string nerve_to_json(const std::string& name, const SimplicialComplex& c,
                          const std::vector<UncertainSimplex>& uncertain) {
  json doc;
  doc["name"] = name;
  doc["m"] = c.alphabet();
  doc["level"] = c.level();
  json simplices = json::object();
  for (int d = 0; d <= c.max_dim(); ++d) {
    json arr = json::array();
    for (const auto& s : c.simplices(d)) arr.push_back(simplex_words(c, s));
    simplices[std::to_string(d)] = std::move(arr);
  }
  doc["simplices"] = std::move(simplices);
  doc["counts"] = json::array();
  for (int d = 0; d <= c.max_dim(); ++d) doc["counts"].push_back(c.count(d));
  doc["maximal"] = json::array();
  for (const auto& s : c.maximal_simplices()) doc["maximal"].push_back(simplex_words(c, s));
  doc["uncertain"] = uncertain_json(uncertain);
  return doc.dump(2) + "\n";
}

std::string nerve_to_dot(const std::string& name, const SimplicialComplex& c) {
  std::ostringstream out;
  out << "graph \"" << name << "_N" << c.level() << "\" {\n";
  for (Vertex v = 0; v < c.vertex_count(); ++v) {
    out << "  \"" << c.vertex_word(v).to_string() << "\";\n";
  }
  for (const auto& e : c.simplices(1)) {
    out << "  \"" << c.vertex_word(e[0]).to_string() << "\" -- \""
        << c.vertex_word(e[1]).to_string() << "\";\n";
  }
  out << "}\n";
  return out.str();
}

std::string betti_csv(const BettiTable& t) {
  std::ostringstream out;
  out << "k";
  for (int r = 0; r <= t.dim_cap; ++r) out << ",a_" << r;
  out << ",lambda_k,components\n";
  for (int k = 1; k <= t.depth(); ++k) {
    out << k;
    for (int r = 0; r <= t.dim_cap; ++r) out << "," << t.at(r, k);
    out << ",";
    if (const auto& l = t.lambda[static_cast<std::size_t>(k - 1)]) out << *l;
    out << "," << t.components[static_cast<std::size_t>(k - 1)] << "\n";
  }
  return out.str();
}

std::string to_json(const PUReport& r) {
  json j;
  j["kind"] = to_string(r.kind);
  j["depth"] = r.depth;
  j["basis"] = r.basis;
  if (r.witness) {
    j["witness"] = {{"pair", {r.witness->first, r.witness->second}}, {"note", r.witness_note}};
  }
  j["pairs"] = json::array();
  for (const auto& p : r.pairs) {
    json pj{{"pair", {p.i, p.j}}, {"empty", p.empty}, {"passes", p.passes}, {"note", p.note}};
    if (p.point) pj["point"] = {to_string(p.point->x), to_string(p.point->y)};
    if (p.pulled) pj["pullback"] = {to_string(p.pulled->x), to_string(p.pulled->y)};
    if (!p.prefixes.empty()) pj["prefixes"] = word_list(p.prefixes);
    j["pairs"].push_back(std::move(pj));
  }
  return j.dump(2) + "\n";
}

std::string to_json(const TheoremCheck& t) { return check_json(t).dump(2) + "\n"; }

std::string to_json(const std::vector<Overlap>& overlaps) {
  json j = json::array();
  for (const auto& o : overlaps) {
    json oj{{"pair", {o.i, o.j}}, {"kind", to_string(o.kind)}, {"note", o.note}};
    if (o.point) oj["point"] = {to_string(o.point->x), to_string(o.point->y)};
    j.push_back(std::move(oj));
  }
  return j.dump(2) + "\n";
}

std::string to_json(const ComponentTower& ct) { return components_json(ct).dump(2) + "\n"; }

std::string to_json(const EffectiveFacts& f) { return facts_json(f).dump(2) + "\n"; }

std::string verdicts_json(const std::string& name, const BettiTable& t, const ComponentTower& ct,
                          const EffectiveFacts& f, const std::vector<UncertainSimplex>& uncertain) {
  json j;
  j["name"] = name;
  j["field"] = t.field;
  j["depth"] = t.depth();
  j["facts"] = facts_json(f);
  j["limits"] = json::array();
  for (std::size_t r = 0; r < t.limits.size(); ++r) {
    const auto& v = t.limits[r];
    json vj{{"r", r}, {"kind", to_string(v.kind)}, {"tag", v.tag}, {"note", v.note}};
    if (v.kind == LimitKind::Finite) vj["value"] = v.value;
    j["limits"].push_back(std::move(vj));
  }
  j["growth"] = json::array();
  for (const auto& row : t.growth) {
    json gr = json::array();
    for (double g : row) {
      // Rounded decimal strings keep the file byte-stable and finite.
      if (std::isinf(g)) {
        gr.push_back("-inf");
      } else {
        std::ostringstream s;
        s.precision(6);
        s << std::fixed << g;
        gr.push_back(s.str());
      }
    }
    j["growth"].push_back(std::move(gr));
  }
  if (t.b1_estimate) {
    j["b1_estimate"] = {{"value", *t.b1_estimate},
                        {"stable_levels", t.lambda_stable_levels},
                        {"note", "lambda_k stabilized for " + std::to_string(t.lambda_stable_levels) +
                                     " consecutive level(s); not a proof of the limit"}};
  }
  j["components"] = components_json(ct);
  j["conditional"] = t.conditional;
  j["uncertain"] = uncertain_json(uncertain);
  return j.dump(2) + "\n";
}

std::string components_to_dot(const std::string& name, const ComponentTower& ct) {
  std::ostringstream out;
  out << "digraph \"" << name << "_components\" {\n";
  for (std::size_t k = 0; k < ct.levels.size(); ++k) {
    const auto& l = ct.levels[k];
    for (std::size_t c = 0; c < l.count; ++c) {
      out << "  \"" << k + 1 << ":" << l.representatives[c].to_string() << "\";\n";
      if (k > 0) {
        out << "  \"" << k + 1 << ":" << l.representatives[c].to_string() << "\" -> \"" << k << ":"
            << ct.levels[k - 1].representatives[l.parent[c]].to_string() << "\";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace icoh
