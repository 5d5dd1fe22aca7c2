// Root systems of the finite Coxeter groups in exact coordinates, and group
// elements as permutations of the root list.
#ifndef HYPCOX_ROOTS_HPP
#define HYPCOX_ROOTS_HPP

#include "hypcox/exact.hpp"
#include "hypcox/symbol.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hypcox {

using ExactNumber = QSqrt5;
using RootVector = std::vector<ExactNumber>;

ExactNumber inner(const RootVector& u, const RootVector& v);
/// u - (2<u,v>/<v,v>) v. Throws std::invalid_argument when v = 0.
RootVector reflect(const RootVector& u, const RootVector& v);
RootVector negate(const RootVector& v);
/// E.g. "(1/2,-1/2,0,...)".
std::string to_string(const RootVector& v);

/// Generator indices, read left to right.
using Word = std::vector<int>;

/// "x1 x2 x1", or the names of a symbol's generators.
std::string word_string(const Word& w);
std::string word_string(const Word& w, const std::vector<std::string>& names);
Word power(const Word& w, int k);
Word concat(std::initializer_list<Word> parts);
Word inverse(const Word& w);

/// A permutation of root indices; the right action (g*h applies g first).
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<std::uint16_t> perm) : perm_(std::move(perm)) {}
  static GroupElement identity(int n);

  int size() const { return static_cast<int>(perm_.size()); }
  int operator[](int r) const { return perm_[r]; }
  const std::vector<std::uint16_t>& perm() const { return perm_; }

  GroupElement inverse() const;
  friend GroupElement operator*(const GroupElement& g, const GroupElement& h);
  friend bool operator==(const GroupElement& g, const GroupElement& h) { return g.perm_ == h.perm_; }
  friend bool operator!=(const GroupElement& g, const GroupElement& h) { return !(g == h); }

 private:
  std::vector<std::uint16_t> perm_;
};

class RootSystem {
 public:
  /// Tables 1-3 types, built from the simple system by closure. I2(m) for
  /// m other than 3, 4, 6 has no exact model here and throws.
  static RootSystem make(const IsoType& t);
  /// Abstract model of I2(m): 2m roots at angles k*pi/m, simples 0 and m-1.
  static RootSystem dihedral(int m);

  const IsoType& type() const { return type_; }
  int rank() const { return static_cast<int>(simple_.size()); }
  int size() const { return static_cast<int>(gens_.empty() ? 0 : gens_[0].size()); }
  /// Ambient dimension; 0 for the abstract dihedral model.
  int dimension() const { return dim_; }
  bool abstract() const { return roots_.empty(); }

  /// Positive roots come first; root r + size()/2 is -root r.
  const std::vector<RootVector>& roots() const { return roots_; }
  const RootVector& root(int r) const { return roots_[r]; }
  int simple(int i) const { return simple_[i]; }
  std::vector<RootVector> simples() const;
  bool positive(int r) const { return r < size() / 2; }
  int negative(int r) const { return r < size() / 2 ? r + size() / 2 : r - size() / 2; }
  /// Coefficients over the simple basis, and their sum.
  const std::vector<ExactNumber>& coefficients(int r) const { return coeffs_[r]; }
  ExactNumber height(int r) const;
  /// Index of v, or -1.
  int find(const RootVector& v) const;

  /// The simple reflection s_i as a permutation of roots.
  const GroupElement& generator(int i) const { return gens_[i]; }
  /// s_v for the root with index r.
  GroupElement reflection(int r) const;

 private:
  IsoType type_;
  int dim_ = 0;
  std::vector<RootVector> roots_;
  std::vector<std::vector<ExactNumber>> coeffs_;
  std::vector<int> simple_;
  std::vector<GroupElement> gens_;
  std::map<std::vector<std::pair<Rational, Rational>>, int> index_;
};

/// The exact simple system of a type in the tables' numbering.
std::vector<RootVector> simple_system(const IsoType& t);

RootSystem root_system(const IsoType& t);

GroupElement word_to_element(const RootSystem& rs, const Word& w);
GroupElement word_to_element(const IsoType& t, const Word& w);

int element_order(const GroupElement& g);
int fixed_roots(const GroupElement& g);

struct ReflectionWord {
  Word word;
  int simple_index = 0;
};

/// A word w and simple index i with w(v) = alpha_i, so s_v = w s_i w^{-1}.
/// Throws std::invalid_argument when v is not a root.
ReflectionWord express_reflection_word(const RootSystem& rs, const RootVector& v);
ReflectionWord express_reflection_word(const RootSystem& rs, int root_index);

/// w s_i w^{-1} as a word.
Word reflection_as_word(const ReflectionWord& rw);

}  // namespace hypcox

#endif  // HYPCOX_ROOTS_HPP
