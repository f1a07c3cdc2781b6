#include "icoh/system.hpp"

#include <algorithm>
#include <set>

#include "icoh/errors.hpp"

namespace icoh {

const GeometricBackend& SystemSpec::geometric() const {
  if (!is_geometric()) throw UnsupportedError("system '" + name + "' is not geometric");
  return std::get<GeometricBackend>(backend);
}

const TableBackend& SystemSpec::table() const {
  if (!is_table()) throw UnsupportedError("system '" + name + "' is not a table system");
  return std::get<TableBackend>(backend);
}

const SymbolicBackend& SystemSpec::symbolic() const {
  if (!is_symbolic()) throw UnsupportedError("system '" + name + "' is not symbolic");
  return std::get<SymbolicBackend>(backend);
}

std::string backend_name(const SystemSpec& spec) {
  if (spec.is_geometric()) return "geometric";
  if (spec.is_table()) return "table";
  return "symbolicPU";
}

namespace {

void validate_geometric(const SystemSpec& spec) {
  const auto& g = spec.geometric();
  if (static_cast<int>(g.maps.size()) != spec.m) {
    throw ValidationError("expected " + std::to_string(spec.m) + " maps, got " +
                          std::to_string(g.maps.size()));
  }
  if (g.envelope.empty()) throw ValidationError("empty envelope");
  std::vector<AffineMap> maps;
  try {
    maps = cell_maps(spec);
  } catch (const UnsupportedError& e) {
    throw ValidationError(e.what());
  }
  for (std::size_t j = 0; j < maps.size(); ++j) {
    if (!is_contraction(maps[j])) {
      throw ValidationError("cell map " + std::to_string(j + 1) + " is not a contraction");
    }
    if (!polygon_contains(g.envelope, map_polygon(maps[j], g.envelope))) {
      throw ValidationError("cell map " + std::to_string(j + 1) +
                            " does not map the envelope into itself");
    }
  }
}

void validate_table(const SystemSpec& spec) {
  const auto& t = spec.table();
  if (t.levels.empty()) throw ValidationError("table system without levels");
  int expect = 1;
  for (const auto& [level, simplices] : t.levels) {
    if (level != expect++) throw ValidationError("table levels must be 1, 2, ..., D");
    for (const auto& s : simplices) {
      if (s.empty()) throw ValidationError("empty simplex at level " + std::to_string(level));
      std::set<Word> seen;
      for (const auto& w : s) {
        if (w.alphabet() != spec.m || static_cast<int>(w.size()) != level) {
          throw ValidationError("word " + w.to_string() + " does not belong to level " +
                                std::to_string(level));
        }
        if (!seen.insert(w).second) {
          throw ValidationError("repeated word " + w.to_string() + " in a simplex");
        }
      }
    }
  }
}

void validate_symbolic(const SystemSpec& spec) {
  const auto& s = spec.symbolic();
  std::set<std::pair<int, int>> ordered_edges;
  for (const auto& simplex : s.n1) {
    if (simplex.empty()) throw ValidationError("empty simplex in n1");
    for (int v : simplex) {
      if (v < 1 || v > spec.m) {
        throw ValidationError("n1 vertex " + std::to_string(v) + " outside 1.." +
                              std::to_string(spec.m));
      }
    }
    for (int a : simplex) {
      for (int b : simplex) {
        if (a == b) continue;
        ordered_edges.insert({a, b});
      }
    }
  }
  for (const auto& e : ordered_edges) {
    if (!s.addresses.count(e)) {
      throw ValidationError("missing address for ordered edge (" + std::to_string(e.first) +
                            "," + std::to_string(e.second) + ")");
    }
  }
  for (const auto& [e, a] : s.addresses) {
    if (!ordered_edges.count(e)) {
      throw ValidationError("address given for non-edge (" + std::to_string(e.first) + "," +
                            std::to_string(e.second) + ")");
    }
    if (a.alphabet() != spec.m) throw ValidationError("address alphabet mismatch");
  }
}

}  // namespace

void validate(const SystemSpec& spec) {
  if (spec.m < 1) throw ValidationError("m must be >= 1");
  if (spec.is_geometric()) {
    validate_geometric(spec);
  } else if (spec.is_table()) {
    validate_table(spec);
  } else {
    validate_symbolic(spec);
  }
}

std::vector<AffineMap> cell_maps(const SystemSpec& spec) {
  const auto& g = spec.geometric();
  if (spec.orientation == Orientation::Forward) return g.maps;
  std::vector<AffineMap> out;
  out.reserve(g.maps.size());
  for (const auto& h : g.maps) out.push_back(h.inverse());
  return out;
}

AffineMap cell_map(const std::vector<AffineMap>& maps, const Word& w) {
  AffineMap out;
  for (std::size_t i = 0; i < w.size(); ++i) out = compose(out, maps.at(w[i] - 1));
  return out;
}

SystemSpec derive_subsystem(const SystemSpec& spec, const std::vector<Word>& words) {
  if (words.empty()) throw InputError("no words given");
  const auto base = cell_maps(spec);
  const std::size_t n = words[0].size();
  std::set<Word> seen;
  for (const auto& w : words) {
    if (w.alphabet() != spec.m) throw InputError("word alphabet mismatch");
    if (w.size() != n || n == 0) throw InputError("words must share one positive length");
    if (!seen.insert(w).second) throw InputError("repeated word " + w.to_string());
  }
  GeometricBackend g;
  g.envelope = spec.geometric().envelope;
  for (const auto& w : words) {
    AffineMap c = cell_map(base, w);
    g.maps.push_back(spec.orientation == Orientation::Forward ? c : c.inverse());
  }
  SystemSpec out;
  std::string label;
  for (const auto& w : words) label += (label.empty() ? "" : ",") + w.to_string();
  out.name = spec.name + "[" + label + "]";
  out.orientation = spec.orientation;
  out.m = static_cast<int>(words.size());
  out.backend = std::move(g);
  // Injectivity is inherited by composites; L_x connectivity by subsystems.
  out.facts.injective = spec.facts.injective;
  out.facts.lx_connected = spec.facts.lx_connected;
  validate(out);
  return out;
}

SystemSpec derive_iterate(const SystemSpec& spec, int n) {
  if (n < 1) throw InputError("iterate order must be >= 1");
  auto out = derive_subsystem(spec, enumerate_words(spec.m, static_cast<std::size_t>(n)));
  out.name = spec.name + "^" + std::to_string(n);
  return out;
}

int table_depth(const SystemSpec& spec) {
  return static_cast<int>(spec.table().levels.size());
}

SimplicialComplex table_level(const SystemSpec& spec, int level, int max_dim) {
  const auto& t = spec.table();
  auto it = t.levels.find(level);
  if (it == t.levels.end()) {
    throw InputError("table system '" + spec.name + "' stores no level " +
                     std::to_string(level));
  }
  SimplicialComplex c(spec.m, level, max_dim);
  for (const auto& words : it->second) {
    Simplex s;
    for (const auto& w : words) s.push_back(c.vertex_of(w));
    c.add(std::move(s));
  }
  return c;
}

SimplicialComplex symbolic_n1(const SystemSpec& spec, int max_dim) {
  SimplicialComplex c(spec.m, 1, max_dim);
  for (const auto& simplex : spec.symbolic().n1) {
    Simplex s;
    for (int v : simplex) s.push_back(static_cast<Vertex>(v - 1));
    c.add(std::move(s));
  }
  return c;
}

}  // namespace icoh
