// icoh: nerve towers and interaction (co)homology of self-similar systems.
//
// Exit codes: 0 ok, 1 internal error, 2 bad input, 3 uncertain oracle
// answers (outputs still written), 4 resource cap exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "icoh/analysis.hpp"
#include "icoh/errors.hpp"
#include "icoh/io.hpp"

namespace fs = std::filesystem;
using namespace icoh;

namespace {

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kInput = 2;
constexpr int kUncertain = 3;
constexpr int kResource = 4;

struct Common {
  std::string spec_path;
  std::string out_dir = ".";
  int dim_cap = 2;
  int threads = 1;
  Budget budget;
  std::uint64_t vertex_cap = kDefaultWordCap;

  NerveOptions nerve() const {
    NerveOptions o;
    o.dim_cap = dim_cap;
    o.threads = threads;
    o.budget = budget;
    o.vertex_cap = vertex_cap;
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("spec", c.spec_path, "System spec file (JSON)")->required();
  cmd->add_option("--out", c.out_dir, "Output directory")->capture_default_str();
  cmd->add_option("--dim-cap", c.dim_cap, "Highest homology degree")->capture_default_str();
  cmd->add_option("--threads", c.threads, "Oracle worker threads")->capture_default_str();
  cmd->add_option("--refine-depth", c.budget.refine_depth, "Oracle refinement rounds")
      ->capture_default_str();
  cmd->add_option("--cert-period", c.budget.cert_period_max, "Longest certificate period")
      ->capture_default_str();
  cmd->add_option("--cert-preperiod", c.budget.cert_preperiod_max,
                  "Longest certificate preperiod")
      ->capture_default_str();
  cmd->add_option("--alive-cap", c.budget.alive_cap, "Alive tuples per refinement round")
      ->capture_default_str();
  cmd->add_option("--vertex-cap", c.vertex_cap, "Largest allowed m^k")->capture_default_str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (!path.parent_path().empty()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
}

int cmd_nerve(const Common& c, int depth) {
  const Oracle oracle(load_spec(c.spec_path));
  const auto& spec = oracle.spec();
  const Nerve n = build_nerve(oracle, depth, c.nerve());
  const fs::path base = fs::path(c.out_dir) / (spec.name + "_N" + std::to_string(depth));
  write_file(base.string() + ".json", nerve_to_json(spec.name, n.complex, n.uncertain));
  write_file(base.string() + ".dot", nerve_to_dot(spec.name, n.complex));
  std::cout << spec.name << " N_" << depth << ":";
  for (int d = 0; d <= std::min(c.dim_cap, n.complex.max_dim()); ++d) {
    std::cout << " " << n.complex.count(d) << (d == 0 ? " vertices," : " " + std::to_string(d) + "-simplices,");
  }
  std::cout << " " << n.uncertain.size() << " uncertain\n";
  std::cout << "wrote " << base.string() << ".json and .dot\n";
  return n.uncertain.empty() ? kOk : kUncertain;
}

void print_table(const BettiTable& t) {
  std::cout << betti_csv(t);
  for (std::size_t r = 0; r < t.limits.size(); ++r) {
    const auto& v = t.limits[r];
    std::cout << "dim H^" << r << ": " << to_string(v.kind);
    if (v.kind == LimitKind::Finite) std::cout << "(" << v.value << ")";
    if (!v.tag.empty()) std::cout << " [" << v.tag << "]";
    if (!v.note.empty()) std::cout << " " << v.note;
    std::cout << "\n";
  }
  if (t.b1_estimate) {
    std::cout << "b_1 estimate " << *t.b1_estimate << ", stabilized for " << t.lambda_stable_levels
              << " level(s)\n";
  }
  if (t.conditional) std::cout << "conditional: built with uncertain simplices\n";
}

int cmd_tower(const Common& c, int max_depth, const std::string& field, int pu_depth) {
  const Oracle oracle(load_spec(c.spec_path));
  const auto& spec = oracle.spec();
  AnalysisOptions opt;
  opt.max_depth = max_depth;
  opt.field = FieldKind::parse(field);
  opt.nerve = c.nerve();
  opt.pu_depth = pu_depth;
  opt.check_overlaps = false;
  if (effective_depth(spec, max_depth) < max_depth) {
    std::cerr << "note: " << spec.name << " stores levels up to " << table_depth(spec)
              << "; tower clamped\n";
  }
  const Analysis a = analyze(oracle, opt);
  const fs::path dir(c.out_dir);
  write_file(dir / (spec.name + "_betti.csv"), betti_csv(a.table));
  write_file(dir / (spec.name + "_verdicts.json"),
             verdicts_json(spec.name, a.table, a.components, a.facts, a.tower.uncertain));
  write_file(dir / (spec.name + "_components.dot"), components_to_dot(spec.name, a.components));
  std::cout << spec.name << " over " << a.table.field << "\n";
  print_table(a.table);
  std::cout << "components: " << a.components.verdict.label();
  if (!a.components.verdict.tag.empty()) std::cout << " [" << a.components.verdict.tag << "]";
  std::cout << "\n";
  return a.tower.certain() ? kOk : kUncertain;
}

std::string summary_line(const std::string& label, const TheoremCheck& t) {
  std::ostringstream s;
  s << label << " (" << t.theorem << "): " << (t.all_hold() ? "all hold" : "not all hold");
  if (const auto* f = t.first_failure()) s << "; first failure " << f->id << ": " << f->witness;
  for (const auto& c : t.conclusions) s << "\n  => " << c;
  return s.str();
}

int cmd_classify(const Common& c, int pu_depth, int tower_depth) {
  const Oracle oracle(load_spec(c.spec_path));
  const auto& spec = oracle.spec();
  AnalysisOptions opt;
  opt.max_depth = tower_depth;
  opt.nerve = c.nerve();
  opt.pu_depth = pu_depth;
  const Analysis a = analyze(oracle, opt);

  std::ostringstream doc;
  doc << "{\n\"name\": \"" << spec.name << "\",\n\"facts\": " << to_json(a.facts);
  if (a.pu) doc << ",\n\"postunbranched\": " << to_json(*a.pu);
  if (a.overlaps) doc << ",\n\"overlaps\": " << to_json(*a.overlaps);
  if (a.h1) doc << ",\n\"h1_conditions\": " << to_json(*a.h1);
  if (a.puthm) doc << ",\n\"puthm\": " << to_json(*a.puthm);
  if (a.sscij1) doc << ",\n\"sscij1thm\": " << to_json(*a.sscij1);
  doc << ",\n\"components\": " << to_json(a.components) << "}\n";
  // Re-parse so the file is one canonical JSON document.
  const std::string text = nlohmann::json::parse(doc.str()).dump(2) + "\n";
  const fs::path out = fs::path(c.out_dir) / (spec.name + "_classify.json");
  write_file(out, text);

  std::cout << spec.name << " (" << backend_name(spec) << ", m=" << spec.m << ")\n";
  if (a.pu) {
    std::cout << "postunbranched: " << to_string(a.pu->kind);
    if (a.pu->kind == PUKind::PostunbranchedUpTo) std::cout << "(" << a.pu->depth << ")";
    if (a.pu->witness) {
      std::cout << " witness (" << a.pu->witness->first << "," << a.pu->witness->second
                << "): " << a.pu->witness_note;
    }
    std::cout << "\n";
  } else {
    std::cout << "postunbranched: " << a.facts.pu_basis << "\n";
  }
  if (a.overlaps) {
    std::cout << "#C_{i,j} <= 1: " << (all_singleton(*a.overlaps) ? "certified" : "not certified")
              << "\n";
  }
  if (a.h1) std::cout << summary_line("H^1 conditions", *a.h1) << "\n";
  if (a.puthm) std::cout << summary_line("postunbranched identities", *a.puthm) << "\n";
  if (a.sscij1) std::cout << summary_line("singleton overlaps", *a.sscij1) << "\n";
  std::cout << "components: " << a.components.verdict.label() << "\n";
  std::cout << "wrote " << out.string() << "\n";
  const bool pu_unknown = spec.is_geometric() && a.pu && a.pu->kind == PUKind::Unknown;
  return a.tower.certain() && !pu_unknown ? kOk : kUncertain;
}

std::vector<Word> parse_word_list(int m, const std::string& text) {
  std::vector<Word> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw InputError("empty word in list '" + text + "'");
    out.push_back(Word::parse(m, item));
  }
  if (out.empty()) throw InputError("empty word list");
  return out;
}

int cmd_derive(const std::string& spec_path, int iterate, const std::string& subsystem,
               const std::string& out_path, const std::string& name) {
  const SystemSpec spec = load_spec(spec_path);
  SystemSpec derived = iterate > 0 ? derive_iterate(spec, iterate)
                                   : derive_subsystem(spec, parse_word_list(spec.m, subsystem));
  if (!name.empty()) derived.name = name;
  const std::string text = spec_to_json(derived);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    write_file(out_path, text);
    std::cerr << "wrote " << out_path << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nerve towers and interaction (co)homology of self-similar systems"};
  app.require_subcommand(1);

  Common nerve_c;
  int depth = 1;
  auto* nerve = app.add_subcommand("nerve", "Build N_k; write JSON simplex lists and DOT");
  add_common(nerve, nerve_c);
  nerve->add_option("--depth", depth, "Level k")->capture_default_str();

  Common tower_c;
  int max_depth = 3;
  std::string field = "q";
  int tower_pu_depth = 4;
  auto* tower = app.add_subcommand("tower", "Betti table, lambda_k, components, limit verdicts");
  add_common(tower, tower_c);
  tower->add_option("--max-depth", max_depth, "Deepest level K")->capture_default_str();
  tower->add_option("--field", field, "q, gf2 or gfp:<prime>")->capture_default_str();
  tower->add_option("--pu-depth", tower_pu_depth, "Depth of the postunbranched check")
      ->capture_default_str();

  Common classify_c;
  int pu_depth = 6;
  int classify_tower = 3;
  auto* classify = app.add_subcommand("classify", "Property checks and theorem verification");
  add_common(classify, classify_c);
  classify->add_option("--depth", pu_depth, "Depth D of the postunbranched check")
      ->capture_default_str();
  classify->add_option("--tower-depth", classify_tower, "Levels built for the table checks")
      ->capture_default_str();

  std::string derive_spec, subsystem, derive_out, derive_name;
  int iterate = 0;
  auto* derive = app.add_subcommand("derive", "Write an iterate or subsystem spec");
  derive->add_option("spec", derive_spec, "System spec file (JSON)")->required();
  auto* it_opt = derive->add_option("--iterate", iterate, "n-th iterate");
  auto* sub_opt = derive->add_option("--subsystem", subsystem, "Comma-separated words");
  it_opt->excludes(sub_opt);
  derive->add_option("--out", derive_out, "Output file (default stdout)");
  derive->add_option("--name", derive_name, "Name of the derived system");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*nerve) return cmd_nerve(nerve_c, depth);
    if (*tower) return cmd_tower(tower_c, max_depth, field, tower_pu_depth);
    if (*classify) return cmd_classify(classify_c, pu_depth, classify_tower);
    if (*derive) {
      if (iterate <= 0 && subsystem.empty()) throw InputError("derive needs --iterate or --subsystem");
      return cmd_derive(derive_spec, iterate, subsystem, derive_out, derive_name);
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const ValidationError& e) {
    std::cerr << "invalid system: " << e.what() << "\n";
    return kInput;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kInput;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
