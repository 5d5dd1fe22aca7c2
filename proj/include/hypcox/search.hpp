// Backtracking search for torsion-free transitive permutation actions of a
// given degree.
#ifndef HYPCOX_SEARCH_HPP
#define HYPCOX_SEARCH_HPP

#include "hypcox/action.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hypcox {

struct SearchConfig {
  int degree = 1;
  long max_nodes = 10000000;
  double max_seconds = 600.0;
  /// Stop after this many solutions.
  int max_solutions = 1;
  bool require_orientable = false;
  /// 0 keeps the natural branch order; otherwise candidates are shuffled
  /// deterministically from this seed.
  std::uint64_t seed = 0;
  /// Built from the symbol when absent.
  std::optional<TorsionInventory> inventory;
};

struct SearchResult {
  std::vector<PermutationAction> solutions;
  /// The whole space was explored.
  bool exhausted = false;
  bool budget_hit = false;
  /// Rejected by the divisibility pre-check.
  bool degree_gate = false;
  long nodes = 0;
};

SearchResult search_torsion_free(const CoxeterSymbol& sym, const SearchConfig& cfg);

}  // namespace hypcox

#endif  // HYPCOX_SEARCH_HPP
