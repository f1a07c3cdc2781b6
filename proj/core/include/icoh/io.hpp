#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "icoh/classify.hpp"
#include "icoh/components.hpp"
#include "icoh/homology.hpp"
#include "icoh/nerve.hpp"
#include "icoh/system.hpp"

namespace icoh {

/// Parses a spec document and validates it. Throws InputError on malformed
/// JSON or fields, ValidationError when the system fails its checks.
SystemSpec parse_spec(std::string_view text);
/// Reads and parses a spec file; missing or unreadable files are InputError.
SystemSpec load_spec(const std::string& path);
/// Pretty-printed spec document (rationals as "p/q" strings).
std::string spec_to_json(const SystemSpec& spec);

/// Simplex lists per dimension, maximal simplices and the uncertain log.
std::string nerve_to_json(const std::string& name, const SimplicialComplex& c,
                          const std::vector<UncertainSimplex>& uncertain);
/// 1-skeleton as an undirected graph; nodes are labelled by their words.
std::string nerve_to_dot(const std::string& name, const SimplicialComplex& c);

/// Header k,a_0..a_d,lambda_k,components; lambda_1 is left blank.
std::string betti_csv(const BettiTable& t);

std::string to_json(const PUReport& r);
std::string to_json(const TheoremCheck& t);
std::string to_json(const std::vector<Overlap>& overlaps);
std::string to_json(const ComponentTower& ct);
std::string to_json(const EffectiveFacts& f);
/// Limit verdicts, growth, b_1 estimate and the component verdict.
std::string verdicts_json(const std::string& name, const BettiTable& t, const ComponentTower& ct,
                          const EffectiveFacts& f, const std::vector<UncertainSimplex>& uncertain);
/// Component tree as a DOT digraph, child -> parent.
std::string components_to_dot(const std::string& name, const ComponentTower& ct);

}  // namespace icoh
