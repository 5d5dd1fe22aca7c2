#include "hypcox/euler.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hypcox {

namespace {

// f(s) = [top condition] - sum over t > s of f(t), over elements avoiding `removed`;
// returns sum f(s) / |s|.
Rational chain_sum(const SphericalPoset& poset, std::uint64_t removed, std::uint64_t top_contains) {
  const auto& el = poset.elements();
  const int n = static_cast<int>(el.size());
  std::vector<Rational> f(n);
  Rational total = 0;
  for (int i = n - 1; i >= 0; --i) {
    std::uint64_t s = el[i].subset.bits();
    if (s & removed) continue;
    Rational v = (s & top_contains) == top_contains ? 1 : 0;
    for (int j = i + 1; j < n; ++j) {
      std::uint64_t t = el[j].subset.bits();
      if ((t & removed) || (s & ~t) || s == t) continue;
      v -= f[j];
    }
    f[i] = v;
    total += v / Rational(el[i].order);
  }
  total.canonicalize();
  return total;
}

Rational alternating_removals(const SphericalPoset& poset, std::uint64_t psi) {
  Rational total = 0;
  // every submask of psi
  for (std::uint64_t d = psi;; d = (d - 1) & psi) {
    Rational chi = chain_sum(poset, d, 0);
    if (__builtin_popcountll(d) % 2) total -= chi;
    else total += chi;
    if (d == 0) break;
  }
  return total;
}

}  // namespace

Rational euler_characteristic(const SphericalPoset& poset) { return chain_sum(poset, 0, 0); }

Rational euler_characteristic(const CoxeterSymbol& sym) { return euler_characteristic(spherical_poset(sym)); }

SigmaPsi sigma_psi(const CoxeterSymbol& sym, SubsetId psi) {
  if (!psi.subset_of(SubsetId::full(sym.rank()))) throw std::invalid_argument("subset outside the symbol");
  SphericalPoset poset = spherical_poset(sym);
  return {chain_sum(poset, 0, psi.bits()), alternating_removals(poset, psi.bits())};
}

Rational serre_sum(const CoxeterSymbol& sym) {
  SphericalPoset poset = spherical_poset(sym);
  return alternating_removals(poset, SubsetId::full(sym.rank()).bits());
}

// ---------------------------------------------------------------- volumes

SymbolicVolume SymbolicVolume::make(Rational coefficient, Constant c, int power) {
  coefficient.canonicalize();
  SymbolicVolume v;
  v.coefficient = coefficient;
  v.constant = c;
  v.power = c == Constant::Pi ? power : 0;
  if (c == Constant::Pi && power == 0) v.constant = Constant::One;
  double k = 1.0;
  if (v.constant == Constant::Pi) k = std::pow(std::numbers::pi, power);
  if (v.constant == Constant::Zeta3) k = 1.2020569031595942853997;
  v.approx = coefficient.get_d() * k;
  return v;
}

std::string SymbolicVolume::str() const {
  if (constant == Constant::One) return to_string(coefficient);
  std::string c = constant == Constant::Zeta3 ? "zeta(3)" : power == 1 ? "pi" : "pi^" + std::to_string(power);
  if (coefficient == 1) return c;
  if (coefficient == -1) return "-" + c;
  return to_string(coefficient) + "*" + c;
}

SymbolicVolume parse_volume(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string coeff, c;
  if (!(in >> coeff)) throw std::invalid_argument("empty volume");
  if (!(in >> c)) c = "1";
  std::string rest;
  if (in >> rest) throw std::invalid_argument("trailing text in volume: " + rest);
  Rational q = parse_rational(coeff);
  if (c == "1") return SymbolicVolume::make(q, Constant::One);
  if (c == "zeta3" || c == "zeta(3)") return SymbolicVolume::make(q, Constant::Zeta3);
  if (c == "pi") return SymbolicVolume::make(q, Constant::Pi, 1);
  if (c.rfind("pi^", 0) == 0) {
    std::size_t used = 0;
    int k = std::stoi(c.substr(3), &used);
    if (used != c.size() - 3 || k < 0) throw std::invalid_argument("bad pi power: " + c);
    return SymbolicVolume::make(q, Constant::Pi, k);
  }
  throw std::invalid_argument("unknown constant: " + c);
}

SymbolicVolume load_volume(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line, body;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    body += line + " ";
  }
  return parse_volume(body);
}

SymbolicVolume gauss_bonnet_constant(int n) {
  if (n < 2 || n % 2) throw std::invalid_argument("Gauss-Bonnet constant needs even n >= 2");
  BigInt fact_n = 1, fact_half = 1;
  for (int i = 2; i <= n; ++i) fact_n *= i;
  for (int i = 2; i <= n / 2; ++i) fact_half *= i;
  BigInt two_n = BigInt(1) << n;
  Rational q(two_n * fact_half, fact_n);
  if ((n / 2) % 2) q = -q;
  return SymbolicVolume::make(q, Constant::Pi, n / 2);
}

ManifoldInvariants manifold_invariants(const Rational& chi_gamma, long index, int n,
                                       const std::optional<SymbolicVolume>& simplex_volume) {
  if (index < 1) throw std::invalid_argument("index must be positive");
  if (n < 2) throw std::invalid_argument("dimension must be >= 2");
  Rational chi = chi_gamma * index;
  chi.canonicalize();
  if (n % 2 == 0) return {chi, chi * gauss_bonnet_constant(n)};
  if (!simplex_volume) throw std::invalid_argument("odd dimension needs the simplex volume");
  if (chi != 0) throw std::invalid_argument("Euler characteristic must vanish in odd dimension");
  return {chi, Rational(index) * *simplex_volume};
}

}  // namespace hypcox
