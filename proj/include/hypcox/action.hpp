// Permutation modules of Coxeter groups: parsing, verification, orbits,
// tensor products, torsion-freeness, orientability and certificates.
#ifndef HYPCOX_ACTION_HPP
#define HYPCOX_ACTION_HPP

#include "hypcox/euler.hpp"
#include "hypcox/roots.hpp"
#include "hypcox/symbol.hpp"
#include "hypcox/torsion.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hypcox {

inline constexpr long kMaxDegree = 10000000;

using Perm = std::vector<std::int32_t>;

/// Right action of the symbol's generators on points 0..degree-1.
struct PermutationAction {
  std::string name;
  /// Informational; the action is bound to `symbol`.
  std::string symbol_name;
  CoxeterSymbol symbol;
  std::vector<Perm> gens;

  int degree() const { return gens.empty() ? 0 : static_cast<int>(gens[0].size()); }
  /// Image of point x under a word, letters applied left to right.
  int apply(const Word& w, int x) const;
};

/// `action <name> on <N> for <symbol>;` then `<gen>: (1 2)(3 4);` or `<gen>: id;`
/// for every generator. Points are 1-based in the text.
PermutationAction parse_action(std::string_view text, const CoxeterSymbol& sym);
PermutationAction load_action(const std::string& path, const CoxeterSymbol& sym);
std::string emit_action(const PermutationAction& a);

PermutationAction make_action(const CoxeterSymbol& sym, std::vector<Perm> gens, std::string name = "action");
/// Right multiplication on the group generated by `gens`, one per generator.
PermutationAction regular_action(const CoxeterSymbol& sym, const std::vector<GroupElement>& gens,
                                 std::size_t max_elements = 1000000);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Involutions and (s_a s_b)^m = 1 for every finite m.
VerifyReport verify_action(const PermutationAction& a);

struct OrbitDecomposition {
  std::vector<std::vector<int>> orbits;
  bool transitive = false;
};

OrbitDecomposition orbits(const PermutationAction& a);
bool is_transitive(const PermutationAction& a);
/// The action restricted to one orbit, renumbered by sorted point.
PermutationAction restrict_to(const PermutationAction& a, const std::vector<int>& orbit);

/// Orbit of `seed` under the diagonal action, numbered in breadth-first order.
PermutationAction tensor(const PermutationAction& a1, const PermutationAction& a2, std::pair<int, int> seed = {0, 0});
/// Every orbit of the diagonal action.
std::vector<PermutationAction> tensor_orbits(const PermutationAction& a1, const PermutationAction& a2);

/// True iff the word moves every point.
bool avoids(const PermutationAction& a, const Word& w);

struct ClassVerdict {
  InventoryEntry entry;
  bool avoided = false;
  /// A fixed point when not avoided, else -1.
  int witness = -1;
  /// For tensor certificates: factors that avoid the word.
  std::vector<int> avoiding_factors;
};

struct TorsionReport {
  bool torsion_free = true;
  std::vector<ClassVerdict> verdicts;
};

TorsionReport is_torsion_free(const PermutationAction& a, const TorsionInventory& inv);
/// Same, also recording which factors of a tensor product avoid each word.
TorsionReport is_torsion_free(const PermutationAction& a, const std::vector<PermutationAction>& factors,
                              const TorsionInventory& inv);

struct OrientabilityReport {
  bool orientable = true;
  /// Indexed like orbits(a).orbits.
  std::vector<bool> per_orbit;
};

/// Points 2-coloured so every generator swaps colours.
OrientabilityReport is_orientable(const PermutationAction& a);

struct BlockSystem {
  int block_size = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of;
  PermutationAction induced;
};

/// Minimal block systems containing {0, x} for each x, deduplicated; only
/// proper ones. Throws std::invalid_argument for intransitive actions.
std::vector<BlockSystem> block_systems(const PermutationAction& a);

struct DivisibilityReport {
  bool preconditions = true;
  std::vector<std::string> failures;
  long omega1 = 0;
  long omega2 = 0;
  long subgroup_order = 1;
  /// Point of the first module fixed by every word of F.
  int fixed_point = -1;
  /// lcm(|omega1| |F|, |omega2|).
  long divisor = 0;
  std::vector<long> orbit_sizes;
  bool holds = false;
};

/// Every diagonal orbit of a1 x a2 has size divisible by |a1| |<F>| when F
/// fixes a point of a1 and acts freely on a2.
DivisibilityReport check_divisibility(const PermutationAction& a1, const PermutationAction& a2,
                                      const std::vector<Word>& f);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct ManifoldCertificate {
  bool valid = false;
  int dimension = 0;
  long index = 0;
  Rational chi_gamma;
  std::optional<Rational> chi;
  std::optional<SymbolicVolume> volume;
  bool orientable = false;
  std::vector<CheckResult> checks;

  /// key=value lines.
  std::string str() const;
};

/// Dimension defaults to rank - 1.
ManifoldCertificate certify(const CoxeterSymbol& sym, const PermutationAction& a, std::optional<int> dim = std::nullopt,
                            const std::optional<SymbolicVolume>& simplex_volume = std::nullopt);

}  // namespace hypcox

#endif  // HYPCOX_ACTION_HPP
