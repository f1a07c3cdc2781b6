#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "icoh/complex.hpp"
#include "icoh/geometry.hpp"
#include "icoh/words.hpp"

namespace icoh {

enum class Orientation { Forward, Backward };

/// Affine generators with a convex envelope K. For backward systems the
/// cells are built from the inverse generators.
struct GeometricBackend {
  std::vector<AffineMap> maps;
  ConvexPolygon envelope;
};

/// Explicit nerves per depth, each given by (maximal) simplices of words.
struct TableBackend {
  std::map<int, std::vector<std::vector<Word>>> levels;
};

/// N_1 plus one address x(i,j) per ordered edge (i,j) of N_1.
struct SymbolicBackend {
  std::vector<std::vector<int>> n1;
  std::map<std::pair<int, int>, Address> addresses;
};

/// Hypotheses that cannot be decided from the data itself. Unset means
/// "not asserted"; some are discharged automatically for geometric systems.
struct Facts {
  std::optional<bool> injective;
  std::optional<bool> lx_connected;
  std::optional<bool> postunbranched;
  std::optional<bool> common_fixed_point;
};

struct SystemSpec {
  std::string name;
  Orientation orientation = Orientation::Forward;
  int m = 0;
  std::variant<GeometricBackend, TableBackend, SymbolicBackend> backend;
  Facts facts;

  bool is_geometric() const { return std::holds_alternative<GeometricBackend>(backend); }
  bool is_table() const { return std::holds_alternative<TableBackend>(backend); }
  bool is_symbolic() const { return std::holds_alternative<SymbolicBackend>(backend); }
  const GeometricBackend& geometric() const;
  const TableBackend& table() const;
  const SymbolicBackend& symbolic() const;
};

std::string backend_name(const SystemSpec& spec);

/// Structural checks; throws ValidationError.
void validate(const SystemSpec& spec);

/// Maps whose composites produce cells: the generators for forward systems,
/// their inverses for backward ones. Throws UnsupportedError when a
/// backward generator is singular.
std::vector<AffineMap> cell_maps(const SystemSpec& spec);

/// Composite cell map for w: c_{w1} o ... o c_{wk}.
AffineMap cell_map(const std::vector<AffineMap>& maps, const Word& w);

/// Geometric system whose generators are the composites indexed by the
/// given words (subsystem of an iterate). For forward systems word w gives
/// h_{w1} o ... o h_{wn}; backward systems get the generator whose inverse
/// is the corresponding cell map. Throws InputError on bad words and
/// ValidationError when the envelope check fails.
SystemSpec derive_subsystem(const SystemSpec& spec, const std::vector<Word>& words);
/// n-th iterate: all m^n words in lexicographic order.
SystemSpec derive_iterate(const SystemSpec& spec, int n);

/// Stored complex of a table system at the given depth.
SimplicialComplex table_level(const SystemSpec& spec, int level, int max_dim);
int table_depth(const SystemSpec& spec);

/// The symbolic N_1 as a complex.
SimplicialComplex symbolic_n1(const SystemSpec& spec, int max_dim);

}  // namespace icoh
