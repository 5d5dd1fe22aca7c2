// Prime-order conjugacy class representatives of the finite Coxeter groups,
// a brute-force class oracle, and the torsion inventory of a symbol.
#ifndef HYPCOX_TORSION_HPP
#define HYPCOX_TORSION_HPP

#include "hypcox/roots.hpp"
#include "hypcox/symbol.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hypcox {

/// Disjoint union of paths whose edges all carry m = 3.
struct CarterDiagram {
  int prime = 2;
  /// Node count of each path component.
  std::vector<int> paths;
  /// Prescribed labels, path by path; empty when unprescribed.
  std::vector<RootVector> labels;
  std::string source;

  int nodes() const;
  /// Diagram-adjacency of nodes a and b in the flattened numbering.
  bool adjacent(int a, int b) const;
  /// Position of node a inside its path.
  int position(int a) const;
};

struct LabelledDiagram {
  CarterDiagram diagram;
  /// Root indices in the type's RootSystem.
  std::vector<int> roots;
};

struct ConjClassRep {
  Word word;
  int order = 0;
  std::string source;
  int fixed_root_count = -1;
};

/// Diagrams of the Carter-type theorems for A, B, D, E, F. Throws for other types.
std::vector<CarterDiagram> prime_class_diagrams(const IsoType& t);

/// Prescribed labels, else simple roots off the Coxeter symbol, else a
/// depth-first search over positive roots. Throws std::logic_error if none.
LabelledDiagram label_diagram(const CarterDiagram& d, const RootSystem& rs);

/// Black reflections then white reflections along each path.
ConjClassRep diagram_element(const LabelledDiagram& ld, const RootSystem& rs);

std::vector<ConjClassRep> h_type_representatives(const IsoType& t);
std::vector<ConjClassRep> dihedral_representatives(int m);

/// Representatives of one irreducible finite type (words in x1..xn).
std::vector<ConjClassRep> class_representatives(const IsoType& t);

/// One factor of a direct product: its representatives with words already in
/// the ambient numbering.
using FactorReps = std::vector<ConjClassRep>;

/// Products of one order-p representative per chosen factor, over every
/// nonempty set of factors.
std::vector<ConjClassRep> reducible_representatives(const std::vector<FactorReps>& factors);
/// Same, for a finite classification with words in the symbol's numbering.
std::vector<ConjClassRep> reducible_representatives(const Classification& c);

struct OracleClass {
  int order = 0;
  std::size_t size = 0;
  int fixed_points = 0;
  std::size_t representative = 0;
};

/// Full element table of a permutation group, with its prime-order classes.
class ClassOracle {
 public:
  /// Closure of `gens` under right multiplication. Throws std::length_error
  /// past `max_elements`, std::invalid_argument past degree 256.
  static ClassOracle build(const std::vector<GroupElement>& gens, std::size_t max_elements = 1000000);

  std::size_t group_size() const { return count_; }
  int degree() const { return degree_; }
  const std::vector<OracleClass>& prime_classes() const { return classes_; }
  GroupElement element(std::size_t i) const;
  /// Element index or -1.
  long find(const GroupElement& g) const;
  /// Prime class containing g, or -1.
  int class_of(const GroupElement& g) const;

 private:
  long lookup(const std::uint8_t* p) const;
  std::size_t insert(const std::uint8_t* p);
  void rehash();

  int degree_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> data_;
  std::vector<std::int64_t> table_;
  std::vector<int> class_id_;
  std::vector<OracleClass> classes_;
};

/// The type's generators acting on roots (or on the 2m-gon for I2(m)).
std::vector<GroupElement> type_generators(const IsoType& t);
ClassOracle brute_force_classes(const IsoType& t, std::size_t max_order = 1000000);

/// Orbit of g under conjugation by the involutions `gens`.
std::vector<GroupElement> conjugacy_class(const std::vector<GroupElement>& gens, const GroupElement& g,
                                          std::size_t max_size = 1000000);

struct InventoryEntry {
  Word word;
  int order = 0;
  SubsetId subset;
  std::string source;
};

struct TorsionInventory {
  std::vector<InventoryEntry> entries;
};

/// Representatives over every maximal spherical subset, in Γ's generators.
TorsionInventory inventory(const CoxeterSymbol& sym);

}  // namespace hypcox

#endif  // HYPCOX_TORSION_HPP
