// Coxeter symbols: parsing, canonical emission, component classification
// against the finite and affine lists, and the poset of spherical subsets.
#ifndef HYPCOX_SYMBOL_HPP
#define HYPCOX_SYMBOL_HPP

#include "hypcox/exact.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace hypcox {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Edge label m_{ab}. 2 means "no edge"; kInfinity encodes a dotted edge.
using EdgeLabel = int;
inline constexpr EdgeLabel kInfinity = 0;
inline constexpr int kMaxRank = 64;

/// A set of generator indices, stored as a bit mask.
class SubsetId {
 public:
  constexpr SubsetId() = default;
  constexpr explicit SubsetId(std::uint64_t bits) : bits_(bits) {}
  static SubsetId of(const std::vector<int>& indices);
  static SubsetId full(int n) { return SubsetId(n >= 64 ? ~0ULL : ((1ULL << n) - 1)); }

  std::uint64_t bits() const { return bits_; }
  bool contains(int i) const { return (bits_ >> i) & 1U; }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcountll(bits_); }
  bool subset_of(SubsetId o) const { return (bits_ & ~o.bits_) == 0; }
  SubsetId with(int i) const { return SubsetId(bits_ | (1ULL << i)); }
  SubsetId without(int i) const { return SubsetId(bits_ & ~(1ULL << i)); }
  std::vector<int> indices() const;

  friend bool operator==(SubsetId a, SubsetId b) { return a.bits_ == b.bits_; }
  friend bool operator!=(SubsetId a, SubsetId b) { return a.bits_ != b.bits_; }
  friend bool operator<(SubsetId a, SubsetId b) { return a.bits_ < b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

class CoxeterSymbol {
 public:
  CoxeterSymbol() = default;
  explicit CoxeterSymbol(std::vector<std::string> generators);

  /// Sets m_{ab}; m must be >= 3 or kInfinity. Throws std::invalid_argument.
  void set_edge(int a, int b, EdgeLabel m);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generators() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  /// Index of a generator name, or -1.
  int index_of(std::string_view name) const;

  /// m_{ab}; 1 on the diagonal, 2 for non-adjacent pairs.
  EdgeLabel label(int a, int b) const { return m_[a * rank() + b]; }
  bool adjacent(int a, int b) const { return a != b && label(a, b) != 2; }
  std::uint64_t neighbours(int a) const { return adj_[a]; }
  /// Edges as (a, b, m) with a < b, in index order.
  std::vector<std::tuple<int, int, EdgeLabel>> edges() const;

  friend bool operator==(const CoxeterSymbol& x, const CoxeterSymbol& y) {
    return x.names_ == y.names_ && x.m_ == y.m_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<EdgeLabel> m_;
  std::vector<std::uint64_t> adj_;
};

/// Parses the symbol DSL: `gens a b c; edge a b : 3; edge b c : inf;`
CoxeterSymbol parse_symbol(std::string_view text);
CoxeterSymbol load_symbol(const std::string& path);
/// Canonical text: generators in declaration order, edges sorted by name.
std::string emit_symbol(const CoxeterSymbol& sym);

/// Generator names of a subset joined by `sep`, e.g. "x1,x3".
std::string subset_names(const CoxeterSymbol& sym, SubsetId sub, std::string_view sep = ",");

/// Restriction to a subset; generators keep their relative order.
CoxeterSymbol induced_subsymbol(const CoxeterSymbol& sym, SubsetId sub);

enum class Family {
  A, B, D, E, F, G, H, I,
  AffineA, AffineB, AffineC, AffineD, AffineE, AffineF, AffineG
};

/// Isomorphism type of an irreducible finite or affine Coxeter group.
/// `rank` is the subscript (Ã_n has n+1 nodes); `m` is only used by I2(m).
struct IsoType {
  Family family = Family::A;
  int rank = 1;
  int m = 0;

  bool finite() const { return family <= Family::I; }
  /// Number of nodes in the symbol.
  int nodes() const { return finite() ? rank : rank + 1; }
  std::string name() const;
  /// Normalizes I2(3), I2(4), I2(6); validates rank restrictions.
  static IsoType make(Family f, int rank, int m = 0);
  /// Parses names such as "E6", "B3", "I2(5)", "~A3".
  static IsoType parse(std::string_view text);

  friend bool operator==(const IsoType& x, const IsoType& y) {
    return x.family == y.family && x.rank == y.rank && x.m == y.m;
  }
  friend bool operator<(const IsoType& x, const IsoType& y) {
    return std::tie(x.family, x.rank, x.m) < std::tie(y.family, y.rank, y.m);
  }
};

/// The symbol of a type with generators "x1".."xn" in canonical order.
CoxeterSymbol canonical_symbol(const IsoType& t);

enum class Kind { Finite, Affine, Other };

struct Component {
  Kind kind = Kind::Other;
  std::optional<IsoType> type;
  /// nodes[k] is the generator matched to canonical node k; sorted when kind is Other.
  std::vector<int> nodes;
};

struct Classification {
  std::vector<Component> components;

  bool finite() const;
  /// Every component affine (and at least one component).
  bool affine() const;
  /// E.g. "A1xB3", "~B3", "OTHER" when any component is unrecognized.
  std::string name() const;
};

struct ClassifyOptions {
  /// Treat a lone infinity edge as the affine Ã1 (parallel mirrors).
  bool infinity_is_affine = false;
};

Classification classify(const CoxeterSymbol& sym, const ClassifyOptions& opts = {});
/// Classification of the induced subsymbol, reported in the symbol's own indices.
Classification classify_subset(const CoxeterSymbol& sym, SubsetId sub,
                               const ClassifyOptions& opts = {});

BigInt group_order(const IsoType& t);
BigInt group_order(const Classification& c);

struct SphericalElement {
  SubsetId subset;
  Classification classification;
  BigInt order;
};

/// All subsets generating finite subgroups, ordered by (size, bits).
class SphericalPoset {
 public:
  explicit SphericalPoset(std::vector<SphericalElement> elements);

  const std::vector<SphericalElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  /// Index of a subset or -1.
  int find(SubsetId s) const;
  /// Elements not strictly contained in another element.
  std::vector<int> maximal() const;

 private:
  std::vector<SphericalElement> elements_;
  std::map<std::uint64_t, int> index_;
};

SphericalPoset spherical_poset(const CoxeterSymbol& sym);

/// Lcm of the orders of the finite standard subgroups.
BigInt lcm_finite_orders(const CoxeterSymbol& sym);
BigInt lcm_finite_orders(const SphericalPoset& poset);

}  // namespace hypcox

#endif  // HYPCOX_SYMBOL_HPP
