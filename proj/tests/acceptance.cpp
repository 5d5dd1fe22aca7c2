// Acceptance run: one PASS/FAIL line per criterion.
#include "hypcox/action.hpp"
#include "hypcox/euler.hpp"
#include "hypcox/gram.hpp"
#include "hypcox/roots.hpp"
#include "hypcox/search.hpp"
#include "hypcox/symbol.hpp"
#include "hypcox/torsion.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace hypcox;

namespace {

CoxeterSymbol fixture(const std::string& name) { return load_symbol(std::string(HYPCOX_FIXTURES) + "/" + name); }

struct Check {
  std::ostringstream notes;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) notes << what;
      ok = false;
    }
  }
};

int failures = 0;

void run(int number, const std::string& title, double budget_seconds, const std::function<void(Check&)>& body) {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (dt > budget_seconds) c.expect(false, "over time budget");
  std::printf("%s criterion %d: %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL", number, title.c_str(), dt, c.ok ? "" : " -- ",
              c.notes.str().c_str());
  std::fflush(stdout);
  failures += !c.ok;
}

std::vector<IsoType> finite_types() {
  std::vector<IsoType> out;
  for (int n = 1; n <= 8; ++n) out.push_back(IsoType::make(Family::A, n));
  for (int n = 2; n <= 8; ++n) out.push_back(IsoType::make(Family::B, n));
  for (int n = 4; n <= 8; ++n) out.push_back(IsoType::make(Family::D, n));
  for (auto name : {"E6", "E7", "E8", "F4", "G2", "H3", "H4"}) out.push_back(IsoType::parse(name));
  for (int m = 5; m <= 30; ++m)
    if (m != 6) out.push_back(IsoType::make(Family::I, 2, m));
  return out;
}

Rational q(long a, long b = 1) { return make_rational(a, b); }

Rational chain_oracle(const SphericalPoset& poset) {
  const auto& el = poset.elements();
  Rational total = 0;
  std::function<void(int, int, const BigInt&)> extend = [&](int top, int k, const BigInt& bottom) {
    total += Rational(k % 2 ? -1 : 1) / Rational(bottom);
    for (int j = 0; j < static_cast<int>(el.size()); ++j)
      if (el[top].subset.subset_of(el[j].subset) && el[top].subset != el[j].subset) extend(j, k + 1, bottom);
  };
  for (int i = 0; i < static_cast<int>(el.size()); ++i) extend(i, 0, el[i].order);
  total.canonicalize();
  return total;
}

PermutationAction coset_action(const CoxeterSymbol& sym, const ClassOracle& group, const std::vector<GroupElement>& gens,
                               const std::vector<GroupElement>& subgroup) {
  const std::size_t n = group.group_size();
  std::vector<std::size_t> h = {0};
  std::set<std::size_t> hs = {0};
  for (std::size_t i = 0; i < h.size(); ++i)
    for (const auto& s : subgroup) {
      auto j = static_cast<std::size_t>(group.find(group.element(h[i]) * s));
      if (hs.insert(j).second) h.push_back(j);
    }
  std::map<std::vector<long>, int> ids;
  std::vector<int> coset(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> key;
    for (auto x : h) key.push_back(group.find(group.element(x) * group.element(i)));
    std::sort(key.begin(), key.end());
    coset[i] = ids.try_emplace(key, static_cast<int>(ids.size())).first->second;
  }
  std::vector<Perm> perms(gens.size(), Perm(ids.size()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < gens.size(); ++s) perms[s][coset[i]] = coset[group.find(group.element(i) * gens[s])];
  return make_action(sym, perms, "cosets");
}

bool near(double x, double y) { return std::abs(x - y) <= 1e-12 * std::abs(y); }

}  // namespace

int main() {
  run(1, "classification and group orders", 1.0, [](Check& c) {
    for (const auto& t : finite_types()) {
      Classification cl = classify(canonical_symbol(t));
      c.expect(cl.components.size() == 1 && cl.components[0].type && *cl.components[0].type == t, "misclassified " + t.name());
      c.expect(cl.name() == t.name(), "name " + cl.name() + " for " + t.name());
    }
    std::map<std::string, long> orders = {{"A8", 362880}, {"B8", 10321920}, {"D8", 5160960}, {"E6", 51840}, {"E7", 2903040},
                                          {"E8", 696729600}, {"F4", 1152}, {"G2", 12}, {"H3", 120}, {"H4", 14400}, {"I2(30)", 60}};
    for (const auto& [name, order] : orders)
      c.expect(group_order(classify(canonical_symbol(IsoType::parse(name)))) == order, "order of " + name);
    for (const auto& t : finite_types()) {
      BigInt expect = 1;
      if (t.family == Family::A) for (int i = 2; i <= t.rank + 1; ++i) expect *= i;
      else if (t.family == Family::B) { expect = BigInt(1) << t.rank; for (int i = 2; i <= t.rank; ++i) expect *= i; }
      else if (t.family == Family::D) { expect = BigInt(1) << (t.rank - 1); for (int i = 2; i <= t.rank; ++i) expect *= i; }
      else if (t.family == Family::I) expect = 2 * t.m;
      else continue;
      c.expect(group_order(t) == expect, "formula order of " + t.name());
    }
  });

  run(2, "Gram signatures", 1.0, [](Check& c) {
    for (const auto& t : finite_types()) {
      if (t.family == Family::I && t.m > 12) continue;
      CoxeterSymbol sym = canonical_symbol(t);
      GramMatrix g = gram_matrix(sym);
      Signature s = signature(g);
      c.expect(s.negatives == 0 && s.positives == sym.rank() && s.zeros == 0, "finite " + t.name());
      if (auto e = exact_signature(g)) c.expect(*e == s, "exact finite " + t.name());
    }
    std::vector<std::string> affine;
    for (int n = 1; n <= 7; ++n) affine.push_back("~A" + std::to_string(n));
    for (int n = 3; n <= 7; ++n) affine.push_back("~B" + std::to_string(n));
    for (int n = 2; n <= 7; ++n) affine.push_back("~C" + std::to_string(n));
    for (int n = 4; n <= 7; ++n) affine.push_back("~D" + std::to_string(n));
    for (auto name : {"~E6", "~E7", "~F4", "~G2"}) affine.push_back(name);
    for (const auto& name : affine) {
      CoxeterSymbol sym = canonical_symbol(IsoType::parse(name));
      GramMatrix g = gram_matrix(sym);
      Signature s = signature(g);
      c.expect(s.negatives == 0 && s.positives == sym.rank() - 1 && s.zeros == 1, "affine " + name);
      if (auto e = exact_signature(g)) c.expect(*e == s, "exact affine " + name);
    }
    int n = 4;
    for (auto name : {"simplex4.cox", "simplex5.cox", "simplex6.cox"}) {
      GramMatrix g = gram_matrix(fixture(name));
      Signature s = signature(g);
      c.expect(s.negatives == 1 && s.positives == n && s.zeros == 0, std::string("signature of ") + name);
      auto e = exact_signature(g);
      c.expect(e && *e == s, std::string("exact signature of ") + name);
      ++n;
    }
  });

  run(3, "Euler characteristics", 10.0, [](Check& c) {
    c.expect(euler_characteristic(fixture("simplex4.cox")) == q(1, 192), "simplex4");
    c.expect(euler_characteristic(fixture("simplex5.cox")) == 0, "simplex5");
    CoxeterSymbol s6 = fixture("simplex6.cox");
    Rational chi = euler_characteristic(s6);
    c.expect(chi == q(-1, 414720), "simplex6");
    c.expect(lcm_finite_orders(s6) == 414720, "simplex6 lcm");
    c.expect(chi * 6635520 == -16, "simplex6 times index");
    for (const auto& t : finite_types()) {
      if (t.rank > 7) continue;
      c.expect(euler_characteristic(canonical_symbol(t)) == Rational(1) / Rational(group_order(t)), "finite " + t.name());
    }
    std::mt19937 rng(84);
    std::uniform_int_distribution<int> pick(2, 12);
    for (int done = 0; done < 20;) {
      int a = pick(rng), b = pick(rng), d = pick(rng);
      if (q(1, a) + q(1, b) + q(1, d) >= 1) continue;
      CoxeterSymbol sym({"a", "b", "c"});
      if (a > 2) sym.set_edge(0, 1, a);
      if (b > 2) sym.set_edge(1, 2, b);
      if (d > 2) sym.set_edge(0, 2, d);
      Rational expect = q(1, 2 * a) + q(1, 2 * b) + q(1, 2 * d) - q(1, 2);
      c.expect(euler_characteristic(sym) == expect, "triangle formula");
      c.expect(chain_oracle(spherical_poset(sym)) == expect, "triangle chain oracle");
      ++done;
    }
    for (auto name : {"simplex4.cox", "simplex5.cox", "simplex6.cox", "triangle_2_3_7.cox", "triangle_2_4_6.cox"})
      c.expect(serre_sum(fixture(name)) == 0, std::string("serre ") + name);
  });

  run(4, "manifold volumes", 1.0, [](Check& c) {
    auto m4 = manifold_invariants(euler_characteristic(fixture("simplex4.cox")), 192, 4);
    c.expect(m4.chi == 1, "simplex4 chi");
    c.expect(m4.volume == SymbolicVolume::make(q(4, 3), Constant::Pi, 2), "simplex4 volume");
    c.expect(near(m4.volume.approx, 4.0 / 3.0 * M_PI * M_PI), "simplex4 approx");
    SymbolicVolume simplex = load_volume(std::string(HYPCOX_FIXTURES) + "/simplex5.vol");
    c.expect(simplex == SymbolicVolume::make(q(7, 1536), Constant::Zeta3), "simplex5 simplex volume");
    auto m5 = manifold_invariants(euler_characteristic(fixture("simplex5.cox")), 3072, 5, simplex);
    c.expect(m5.volume == SymbolicVolume::make(14, Constant::Zeta3), "simplex5 volume");
    c.expect(near(m5.volume.approx, 14 * 1.2020569031595942854), "simplex5 approx");
    auto m6 = manifold_invariants(euler_characteristic(fixture("simplex6.cox")), 6635520, 6);
    c.expect(m6.chi == -16, "simplex6 chi");
    c.expect(near(m6.volume.approx, 128.0 / 15.0 * M_PI * M_PI * M_PI), "simplex6 approx");
  });

  run(5, "torsion oracle equivalence", 300.0, [](Check& c) {
    for (const auto& t : finite_types()) {
      if (group_order(t) > 1000000) continue;
      ClassOracle oracle = brute_force_classes(t);
      auto gens = type_generators(t);
      std::set<int> hit;
      for (const auto& rep : class_representatives(t)) {
        GroupElement g = GroupElement::identity(gens[0].size());
        for (int i : rep.word) g = g * gens[i];
        c.expect(element_order(g) == rep.order, "order of " + rep.source);
        int k = oracle.class_of(g);
        c.expect(k >= 0 && oracle.prime_classes()[k].order == rep.order, "class of " + rep.source);
        hit.insert(k);
      }
      for (int k = 0; k < static_cast<int>(oracle.prime_classes().size()); ++k)
        c.expect(hit.count(k) > 0, t.name() + " misses a class");
    }
    auto tally = [](const IsoType& t) {
      std::map<int, int> m;
      ClassOracle oracle = brute_force_classes(t);
      for (const auto& cls : oracle.prime_classes()) ++m[cls.order];
      return m;
    };
    c.expect(tally(IsoType::parse("D4")) == std::map<int, int>{{2, 6}, {3, 1}}, "D4 classes");
    c.expect(tally(IsoType::parse("H3")) == std::map<int, int>{{2, 3}, {3, 1}, {5, 2}}, "H3 classes");
  });

  run(6, "E6 worked example", 5.0, [](Check& c) {
    IsoType t = IsoType::parse("E6");
    Word w = {5, 2, 1, 0, 3, 2, 1, 5, 2, 3};
    Word g = concat({{4, 1, 5, 3, 0}, w, {4}, inverse(w)});
    GroupElement e = word_to_element(t, g);
    c.expect(element_order(e) == 3, "order");
    ClassOracle oracle = brute_force_classes(t);
    int k = oracle.class_of(e);
    c.expect(k >= 0 && oracle.prime_classes()[k].order == 3, "in an order-3 class");
  });

  run(7, "tensor machinery, 500 randomized trials each", 60.0, [](Check& c) {
    CoxeterSymbol b3 = fixture("b3.cox");
    auto gens = type_generators(IsoType::parse("B3"));
    ClassOracle group = ClassOracle::build(gens);
    TorsionInventory inv = inventory(b3);
    std::mt19937 rng(500);
    std::uniform_int_distribution<std::size_t> elem(0, group.group_size() - 1);
    std::vector<PermutationAction> pool;
    while (pool.size() < 60 || std::none_of(pool.begin(), pool.end(), [](const auto& a) { return a.degree() == 3; }) ||
           std::none_of(pool.begin(), pool.end(), [](const auto& a) { return a.degree() > 1 && is_orientable(a).orientable; })) {
      std::vector<GroupElement> sub;
      int k = std::uniform_int_distribution<int>(0, 4)(rng);
      for (int i = 0; i < k; ++i) sub.push_back(group.element(elem(rng)));
      pool.push_back(coset_action(b3, group, gens, sub));
    }
    std::vector<std::size_t> orientable;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (is_orientable(pool[i]).orientable) orientable.push_back(i);
    std::uniform_int_distribution<std::size_t> which(0, pool.size() - 1), which_or(0, orientable.size() - 1);
    int violations = 0;
    for (int trial = 0; trial < 500; ++trial) {
      const auto& a1 = pool[which(rng)];
      const auto& a2 = pool[which(rng)];
      auto parts = tensor_orbits(a1, a2);
      for (const auto& e : inv.entries) {
        bool direct = true;
        for (const auto& p : parts) direct = direct && avoids(p, e.word);
        violations += direct != (avoids(a1, e.word) || avoids(a2, e.word));
      }
    }
    c.expect(violations == 0, "avoidance biconditional");
    violations = 0;
    for (int trial = 0; trial < 500; ++trial) {
      const auto& a1 = pool[which(rng)];
      const auto& a2 = pool[which(rng)];
      long n1 = a1.degree(), n2 = a2.degree();
      for (const auto& p : tensor_orbits(a1, a2)) {
        violations += p.degree() % std::lcm(n1, n2) != 0 || p.degree() > n1 * n2;
        violations += std::gcd(n1, n2) == 1 && p.degree() != n1 * n2;
      }
    }
    c.expect(violations == 0, "orbit size bounds");
    violations = 0;
    for (int trial = 0; trial < 500; ++trial) {
      const auto& a1 = pool[orientable[which_or(rng)]];
      const auto& a2 = pool[which(rng)];
      for (const auto& p : tensor_orbits(a1, a2)) violations += !is_orientable(p).orientable;
    }
    c.expect(violations == 0, "orientability inheritance");
  });

  run(8, "search on the (2,4,6) and (2,3,7) triangle groups", 600.0, [](Check& c) {
    CoxeterSymbol tri = fixture("triangle_2_4_6.cox");
    // witness: regular action of B3 through involutions with product orders 4, 6, 2
    ClassOracle b3 = ClassOracle::build(type_generators(IsoType::parse("B3")));
    std::vector<GroupElement> inv;
    for (std::size_t i = 1; i < b3.group_size(); ++i)
      if (element_order(b3.element(i)) == 2) inv.push_back(b3.element(i));
    std::optional<PermutationAction> witness;
    for (const auto& x : inv)
      for (const auto& y : inv)
        for (const auto& z : inv)
          if (!witness && element_order(x * y) == 4 && element_order(y * z) == 6 && element_order(x * z) == 2) {
            auto a = regular_action(tri, {x, y, z});
            if (a.degree() == 48) witness = a;
          }
    c.expect(witness.has_value(), "no quotient witness");
    if (witness) {
      auto cert = certify(tri, *witness, 2);
      c.expect(cert.valid && *cert.chi == -2 && cert.volume->str() == "4*pi", "witness certificate");
    }
    SearchConfig cfg;
    cfg.degree = 48;
    auto r = search_torsion_free(tri, cfg);
    c.expect(!r.solutions.empty(), "search found nothing");
    if (!r.solutions.empty()) {
      auto cert = certify(tri, r.solutions[0], 2);
      c.expect(cert.valid, "search certificate invalid");
      c.expect(*cert.chi == -2, "chi");
      c.expect(cert.volume && cert.volume->str() == "4*pi" && near(cert.volume->approx, 4 * M_PI), "volume");
    }
    cfg.degree = 83;
    auto t0 = std::chrono::steady_clock::now();
    auto gate = search_torsion_free(fixture("triangle_2_3_7.cox"), cfg);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(gate.degree_gate && gate.exhausted && gate.solutions.empty() && dt < 0.1, "degree 83 pre-check");
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
