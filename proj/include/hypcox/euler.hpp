// Euler characteristics of Coxeter groups and volumes of their
// torsion-free quotients.
#ifndef HYPCOX_EULER_HPP
#define HYPCOX_EULER_HPP

#include "hypcox/exact.hpp"
#include "hypcox/symbol.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace hypcox {

/// Signed chain sum over the spherical poset.
Rational euler_characteristic(const CoxeterSymbol& sym);
Rational euler_characteristic(const SphericalPoset& poset);

struct SigmaPsi {
  /// Chains whose top element contains psi.
  Rational chain_sum;
  /// Alternating sum of chi over the removals of subsets of psi.
  Rational inclusion_exclusion;
};

SigmaPsi sigma_psi(const CoxeterSymbol& sym, SubsetId psi);

/// Sum over all subsets D of (-1)^|D| chi(sym - D). Zero for infinite groups.
Rational serre_sum(const CoxeterSymbol& sym);

enum class Constant { One, Pi, Zeta3 };

struct SymbolicVolume {
  Rational coefficient;
  Constant constant = Constant::One;
  /// Exponent of pi when constant is Pi.
  int power = 0;
  double approx = 0.0;

  static SymbolicVolume make(Rational coefficient, Constant c, int power = 0);
  /// E.g. "-2*pi", "4/3*pi^2", "14*zeta(3)", "3".
  std::string str() const;

  friend SymbolicVolume operator*(const Rational& q, const SymbolicVolume& v) {
    return make(q * v.coefficient, v.constant, v.power);
  }
  friend bool operator==(const SymbolicVolume& x, const SymbolicVolume& y) {
    return x.coefficient == y.coefficient && x.constant == y.constant && x.power == y.power;
  }
};

/// Parses "<rational> <constant>" with constant one of 1, pi, pi^k, zeta3.
SymbolicVolume parse_volume(std::string_view text);
SymbolicVolume load_volume(const std::string& path);

/// 2^n (n!)^-1 (-pi)^(n/2) (n/2)! for even n >= 2.
SymbolicVolume gauss_bonnet_constant(int n);

struct ManifoldInvariants {
  Rational chi;
  SymbolicVolume volume;
};

/// Euler characteristic and volume of an index-`index` torsion-free subgroup
/// acting on hyperbolic n-space.
ManifoldInvariants manifold_invariants(const Rational& chi_gamma, long index, int n,
                                       const std::optional<SymbolicVolume>& simplex_volume = std::nullopt);

}  // namespace hypcox

#endif  // HYPCOX_EULER_HPP
