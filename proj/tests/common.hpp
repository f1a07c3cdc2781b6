#pragma once

#include <set>
#include <string>
#include <vector>

#include "icoh/io.hpp"
#include "icoh/oracle.hpp"

inline icoh::SystemSpec bundled(const std::string& name) {
  return icoh::load_spec(std::string(ICOH_SPEC_DIR) + "/" + name + ".json");
}

inline icoh::Word W(int m, const char* text) { return icoh::Word::parse(m, text); }

/// Simplices of dimension d as sets of word strings.
inline std::set<std::set<std::string>> word_sets(const icoh::SimplicialComplex& c, int d) {
  std::set<std::set<std::string>> out;
  for (const auto& s : c.simplices(d)) {
    std::set<std::string> ws;
    for (auto v : s) ws.insert(c.vertex_word(v).to_string());
    out.insert(ws);
  }
  return out;
}

inline std::set<std::set<std::string>> maximal_word_sets(const icoh::SimplicialComplex& c) {
  std::set<std::set<std::string>> out;
  for (const auto& s : c.maximal_simplices()) {
    std::set<std::string> ws;
    for (auto v : s) ws.insert(c.vertex_word(v).to_string());
    out.insert(ws);
  }
  return out;
}
