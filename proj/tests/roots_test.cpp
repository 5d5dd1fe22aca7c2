#include "hypcox/roots.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace hypcox;

namespace {

using Key = std::vector<std::pair<Rational, Rational>>;

Key key(const RootVector& v) {
  Key k;
  for (const auto& x : v) k.emplace_back(x.rational_part(), x.sqrt5_part());
  return k;
}

std::set<Key> key_set(const std::vector<RootVector>& vs) {
  std::set<Key> s;
  for (const auto& v : vs) s.insert(key(v));
  return s;
}

RootVector vec(std::initializer_list<QSqrt5> xs) { return RootVector(xs); }

// +-e_i +- e_j over the index range [1, top], in dimension d.
void add_pm_pairs(std::vector<RootVector>& out, int d, int top) {
  for (int i = 1; i <= top; ++i)
    for (int j = i + 1; j <= top; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          RootVector v(d);
          v[i - 1] = si;
          v[j - 1] = sj;
          out.push_back(v);
        }
}

// (1/2) sum eps_i e_i over all sign vectors accepted by `keep`.
void add_half_sums(std::vector<RootVector>& out, const std::function<bool(const std::array<int, 8>&)>& keep) {
  for (int mask = 0; mask < 256; ++mask) {
    std::array<int, 8> eps;
    int prod = 1;
    for (int i = 0; i < 8; ++i) {
      eps[i] = (mask >> i) & 1 ? -1 : 1;
      prod *= eps[i];
    }
    if (prod != 1 || !keep(eps)) continue;
    RootVector v;
    for (int e : eps) v.emplace_back(Rational(e, 2));
    out.push_back(v);
  }
}

std::vector<IsoType> types() {
  std::vector<IsoType> out;
  for (auto n : {"A1", "A2", "A5", "A8", "B2", "B3", "B6", "D4", "D5", "D8", "E6", "E7", "E8", "F4", "G2", "H3", "H4"})
    out.push_back(IsoType::parse(n));
  return out;
}

}  // namespace

TEST(Roots, Counts) {
  EXPECT_EQ(root_system(IsoType::parse("A2")).size(), 6);
  EXPECT_EQ(root_system(IsoType::parse("A8")).size(), 72);
  EXPECT_EQ(root_system(IsoType::parse("B5")).size(), 50);
  EXPECT_EQ(root_system(IsoType::parse("D6")).size(), 60);
  EXPECT_EQ(root_system(IsoType::parse("E6")).size(), 72);
  EXPECT_EQ(root_system(IsoType::parse("E7")).size(), 126);
  EXPECT_EQ(root_system(IsoType::parse("E8")).size(), 240);
  EXPECT_EQ(root_system(IsoType::parse("F4")).size(), 48);
  EXPECT_EQ(root_system(IsoType::parse("G2")).size(), 12);
  EXPECT_EQ(root_system(IsoType::parse("H3")).size(), 30);
  EXPECT_EQ(root_system(IsoType::parse("H4")).size(), 120);
  EXPECT_THROW(root_system(IsoType::parse("I2(5)")), std::invalid_argument);
}

TEST(Roots, ExceptionalTablesMatchClosure) {
  std::vector<RootVector> e8;
  add_pm_pairs(e8, 8, 8);
  add_half_sums(e8, [](const auto&) { return true; });
  EXPECT_EQ(e8.size(), 240u);
  EXPECT_EQ(key_set(e8), key_set(root_system(IsoType::parse("E8")).roots()));

  std::vector<RootVector> e7;
  add_pm_pairs(e7, 8, 6);
  RootVector d(8);
  d[6] = 1;
  d[7] = -1;
  e7.push_back(d);
  e7.push_back(negate(d));
  add_half_sums(e7, [](const auto& e) { return e[7] == -e[6]; });
  EXPECT_EQ(e7.size(), 126u);
  EXPECT_EQ(key_set(e7), key_set(root_system(IsoType::parse("E7")).roots()));

  std::vector<RootVector> e6;
  add_pm_pairs(e6, 8, 5);
  add_half_sums(e6, [](const auto& e) { return e[7] == -e[6] && e[7] == -e[5]; });
  EXPECT_EQ(e6.size(), 72u);
  EXPECT_EQ(key_set(e6), key_set(root_system(IsoType::parse("E6")).roots()));
}

TEST(Roots, QuaternionImages) {
  const QSqrt5 a(Rational(1, 4), Rational(1, 4));
  const QSqrt5 b(Rational(-1, 4), Rational(1, 4));
  const QSqrt5 h(Rational(1, 2));
  std::vector<RootVector> seeds = {vec({1, 0, 0, 0}), vec({h, h, h, h}), vec({a, h, b, 0})};
  std::vector<std::array<int, 4>> even;
  std::array<int, 4> p = {0, 1, 2, 3};
  do {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inv += p[i] > p[j];
    if (inv % 2 == 0) even.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::set<Key> h4;
  for (const auto& s : seeds)
    for (const auto& perm : even)
      for (int signs = 0; signs < 16; ++signs) {
        RootVector v(4);
        for (int i = 0; i < 4; ++i) v[perm[i]] = (signs >> i) & 1 ? -s[i] : s[i];
        h4.insert(key(v));
      }
  EXPECT_EQ(h4.size(), 120u);
  EXPECT_EQ(h4, key_set(root_system(IsoType::parse("H4")).roots()));

  std::set<Key> h3;
  for (const auto& k : h4)
    if (k[3].first == 0 && k[3].second == 0) h3.insert(Key(k.begin(), k.begin() + 3));
  EXPECT_EQ(h3.size(), 30u);
  EXPECT_EQ(h3, key_set(root_system(IsoType::parse("H3")).roots()));
}

TEST(Roots, Reflect) {
  RootVector e1 = vec({1, 0, 0});
  RootVector d = vec({1, -1, 0});
  EXPECT_EQ(reflect(e1, d), vec({0, 1, 0}));
  EXPECT_EQ(reflect(d, d), negate(d));
  EXPECT_EQ(reflect(vec({0, 0, 1}), d), vec({0, 0, 1}));
}

TEST(Roots, ClosureAndCoxeterMatrix) {
  for (const auto& t : types()) {
    auto rs = root_system(t);
    auto sym = canonical_symbol(t);
    ASSERT_EQ(rs.rank(), sym.rank());
    for (int i = 0; i < rs.rank(); ++i) {
      for (const auto& u : rs.roots()) EXPECT_GE(rs.find(reflect(u, rs.root(rs.simple(i)))), 0);
      for (int j = 0; j < rs.rank(); ++j) {
        if (i == j) continue;
        const auto& u = rs.root(rs.simple(i));
        const auto& v = rs.root(rs.simple(j));
        QSqrt5 c = inner(u, v);
        QSqrt5 ratio = QSqrt5(4) * c * c / (inner(u, u) * inner(v, v));
        int m = sym.label(i, j);
        double expect = 4 * std::pow(std::cos(M_PI / m), 2);
        EXPECT_NEAR(ratio.to_double(), m == 2 ? 0.0 : expect, 1e-12) << t.name();
        EXPECT_LE(c.sign(), 0);
        if (m != 5) EXPECT_TRUE(ratio.is_rational());
      }
    }
  }
}

TEST(Roots, Relators) {
  for (const auto& t : types()) {
    auto rs = root_system(t);
    auto sym = canonical_symbol(t);
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) {
        int m = sym.label(i, j);
        auto g = word_to_element(rs, power({i, j}, m));
        EXPECT_EQ(g, GroupElement::identity(rs.size())) << t.name();
        EXPECT_EQ(element_order(word_to_element(rs, {i, j})), m) << t.name();
      }
  }
  for (int m = 3; m <= 12; ++m) {
    auto rs = RootSystem::dihedral(m);
    EXPECT_EQ(element_order(word_to_element(rs, {0, 1})), m);
    EXPECT_EQ(element_order(rs.generator(0)), 2);
  }
}

TEST(Roots, ElementsAndFixedRoots) {
  auto a2 = root_system(IsoType::parse("A2"));
  EXPECT_EQ(element_order(word_to_element(a2, {})), 1);
  EXPECT_EQ(element_order(word_to_element(a2, {0, 1})), 3);
  // Roots fixed by s_v are the roots orthogonal to v; none in A2.
  int orthogonal = 0;
  for (const auto& u : a2.roots()) orthogonal += inner(u, a2.root(a2.simple(0))).is_zero();
  EXPECT_EQ(fixed_roots(a2.generator(0)), orthogonal);
  EXPECT_EQ(orthogonal, 0);
  auto b3 = root_system(IsoType::parse("B3"));
  EXPECT_EQ(fixed_roots(b3.generator(0)), 4);
  EXPECT_THROW(word_to_element(a2, {2}), std::out_of_range);

  auto h3 = root_system(IsoType::parse("H3"));
  EXPECT_EQ(fixed_roots(word_to_element(h3, {})), 30);
  // Rotation axes of orders 3 and 5 carry no roots.
  EXPECT_EQ(fixed_roots(word_to_element(h3, {0, 1})), 0);
  EXPECT_EQ(fixed_roots(word_to_element(h3, {1, 2})), 0);
  EXPECT_EQ(fixed_roots(h3.generator(0)), 4);
  auto h4 = root_system(IsoType::parse("H4"));
  EXPECT_EQ(fixed_roots(word_to_element(h4, {0, 1})), 6);
  EXPECT_EQ(fixed_roots(word_to_element(h4, {1, 2})), 6);
}

TEST(Roots, E6WorkedExample) {
  auto rs = root_system(IsoType::parse("E6"));
  // x1..x6 -> 0..5
  Word w = {5, 2, 1, 0, 3, 2, 1, 5, 2, 3};
  Word g = concat({{4, 1, 5, 3, 0}, w, {4}, inverse(w)});
  EXPECT_EQ(element_order(word_to_element(rs, g)), 3);

  Rational h(1, 2);
  RootVector v;
  for (int i = 0; i < 8; ++i) v.emplace_back(i == 5 || i == 6 ? -h : h);
  int r = rs.find(v);
  ASSERT_GE(r, 0);
  // The printed w carries v to the simple root of x5.
  EXPECT_EQ(word_to_element(rs, w)[r], rs.simple(4));

  auto rw = express_reflection_word(rs, v);
  EXPECT_EQ(word_to_element(rs, rw.word)[r], rs.simple(rw.simple_index));
  EXPECT_EQ(word_to_element(rs, reflection_as_word(rw)), rs.reflection(r));
  EXPECT_EQ(word_to_element(rs, concat({w, {4}, inverse(w)})), rs.reflection(r));
}

TEST(Roots, ExpressReflectionWord) {
  std::mt19937 rng(3);
  for (const auto& t : types()) {
    auto rs = root_system(t);
    std::uniform_int_distribution<int> pick(0, rs.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      int r = pick(rng);
      auto rw = express_reflection_word(rs, r);
      int pr = rs.positive(r) ? r : rs.negative(r);
      EXPECT_EQ(word_to_element(rs, rw.word)[pr], rs.simple(rw.simple_index));
      EXPECT_EQ(word_to_element(rs, reflection_as_word(rw)), rs.reflection(r)) << t.name();
    }
  }
  auto rs = root_system(IsoType::parse("B3"));
  auto simple = express_reflection_word(rs, rs.simple(2));
  EXPECT_TRUE(simple.word.empty());
  EXPECT_EQ(simple.simple_index, 2);
  auto neg = express_reflection_word(rs, rs.negative(rs.simple(1)));
  EXPECT_TRUE(neg.word.empty());
  EXPECT_EQ(neg.simple_index, 1);
  EXPECT_THROW(express_reflection_word(rs, vec({1, 1, 1})), std::invalid_argument);

  auto d7 = RootSystem::dihedral(7);
  for (int r = 0; r < d7.size(); ++r)
    EXPECT_EQ(word_to_element(d7, reflection_as_word(express_reflection_word(d7, r))), d7.reflection(r));
}

TEST(Roots, FormPreserved) {
  auto rs = root_system(IsoType::parse("F4"));
  auto g = word_to_element(rs, {0, 1, 2, 3, 1, 2});
  for (int r = 0; r < rs.size(); ++r)
    for (int s = 0; s < rs.size(); s += 5) EXPECT_EQ(inner(rs.root(r), rs.root(s)), inner(rs.root(g[r]), rs.root(g[s])));
}
