#include "hypcox/roots.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace hypcox {

ExactNumber inner(const RootVector& u, const RootVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("dimension mismatch");
  ExactNumber s;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

RootVector reflect(const RootVector& u, const RootVector& v) {
  ExactNumber vv = inner(v, v);
  if (vv.is_zero()) throw std::invalid_argument("reflection in the zero vector");
  ExactNumber k = ExactNumber(2) * inner(u, v) / vv;
  RootVector out = u;
  if (k.is_zero()) return out;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= k * v[i];
  return out;
}

RootVector negate(const RootVector& v) {
  RootVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(-x);
  return out;
}

std::string to_string(const RootVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

// ---------------------------------------------------------------- words

std::string word_string(const Word& w) {
  std::vector<std::string> names;
  int top = w.empty() ? 0 : *std::max_element(w.begin(), w.end()) + 1;
  for (int i = 0; i < top; ++i) names.push_back("x" + std::to_string(i + 1));
  return word_string(w, names);
}

std::string word_string(const Word& w, const std::vector<std::string>& names) {
  std::string s;
  for (int g : w) {
    if (!s.empty()) s += " ";
    s += names.at(g);
  }
  return s;
}

Word power(const Word& w, int k) {
  Word out;
  for (int i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Word inverse(const Word& w) { return Word(w.rbegin(), w.rend()); }

// ---------------------------------------------------------------- elements

GroupElement GroupElement::identity(int n) {
  std::vector<std::uint16_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return GroupElement(std::move(p));
}

GroupElement GroupElement::inverse() const {
  std::vector<std::uint16_t> p(perm_.size());
  for (std::size_t r = 0; r < perm_.size(); ++r) p[perm_[r]] = static_cast<std::uint16_t>(r);
  return GroupElement(std::move(p));
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  std::vector<std::uint16_t> p(g.perm_.size());
  for (std::size_t r = 0; r < p.size(); ++r) p[r] = h.perm_[g.perm_[r]];
  return GroupElement(std::move(p));
}

int element_order(const GroupElement& g) {
  const int n = g.size();
  std::vector<char> seen(n, 0);
  long order = 1;
  for (int r = 0; r < n; ++r) {
    if (seen[r]) continue;
    long len = 0;
    for (int x = r; !seen[x]; x = g[x]) {
      seen[x] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return static_cast<int>(order);
}

int fixed_roots(const GroupElement& g) {
  int c = 0;
  for (int r = 0; r < g.size(); ++r) c += g[r] == r;
  return c;
}

// ---------------------------------------------------------------- simple systems

namespace {

RootVector unit(int d, int i) {
  RootVector v(d);
  v[i - 1] = 1;
  return v;
}

RootVector add(RootVector u, const RootVector& v, int sign = 1) {
  for (std::size_t i = 0; i < u.size(); ++i) u[i] += sign > 0 ? v[i] : -v[i];
  return u;
}

RootVector diff(int d, int i, int j) { return add(unit(d, i), unit(d, j), -1); }
RootVector sum(int d, int i, int j) { return add(unit(d, i), unit(d, j)); }

RootVector rational(std::initializer_list<Rational> xs) {
  RootVector v;
  for (const auto& x : xs) v.emplace_back(x);
  return v;
}

// e1 + e8 - (1/2) sum e_i
RootVector e_type_v() {
  Rational h(1, 2);
  return rational({h, -h, -h, -h, -h, -h, -h, h});
}

using Key = std::vector<std::pair<Rational, Rational>>;

Key key_of(const RootVector& v) {
  Key k;
  k.reserve(v.size());
  for (const auto& x : v) k.emplace_back(x.rational_part(), x.sqrt5_part());
  return k;
}

}  // namespace

std::vector<RootVector> simple_system(const IsoType& t) {
  const int n = t.rank;
  std::vector<RootVector> s;
  const QSqrt5 a(Rational(1, 4), Rational(1, 4));
  const QSqrt5 b(Rational(-1, 4), Rational(1, 4));
  const QSqrt5 h(Rational(1, 2));
  switch (t.family) {
    case Family::A:
      for (int i = 1; i <= n; ++i) s.push_back(diff(n + 1, i, i + 1));
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) s.push_back(diff(n, i, i + 1));
      s.push_back(unit(n, n));
      break;
    case Family::D:
      for (int i = 1; i < n; ++i) s.push_back(diff(n, i, i + 1));
      s.push_back(sum(n, n - 1, n));
      break;
    case Family::E:
      for (int i = n - 1; i >= 2; --i) s.push_back(diff(8, i, i - 1));
      s.push_back(e_type_v());
      s.push_back(sum(8, 1, 2));
      break;
    case Family::F:
      s.push_back(diff(4, 1, 2));
      s.push_back(diff(4, 2, 3));
      s.push_back(unit(4, 3));
      s.push_back(rational({Rational(-1, 2), Rational(-1, 2), Rational(-1, 2), Rational(1, 2)}));
      break;
    case Family::G:
      s.push_back(diff(3, 1, 2));
      s.push_back(rational({-2, 1, 1}));
      break;
    case Family::H:
      if (n == 4) s.push_back({-h, -a, 0, b});
      s.push_back({h, b, -a, 0});
      s.push_back({-a, h, b, 0});
      s.push_back({a, -h, b, 0});
      // H3 lives in the span of 1, i, j.
      if (n == 3)
        for (auto& v : s) v.pop_back();
      break;
    default:
      throw std::invalid_argument("no exact root system for " + t.name());
  }
  return s;
}

// ---------------------------------------------------------------- RootSystem

RootSystem RootSystem::make(const IsoType& t) {
  std::vector<RootVector> simples = simple_system(t);
  RootSystem rs;
  rs.type_ = t;
  const int n = static_cast<int>(simples.size());
  rs.dim_ = static_cast<int>(simples[0].size());

  std::vector<ExactNumber> norms;
  for (const auto& v : simples) norms.push_back(inner(v, v));

  struct Entry {
    RootVector v;
    std::vector<ExactNumber> c;
  };
  std::vector<Entry> found;
  std::map<Key, int> seen;
  std::deque<int> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<ExactNumber> c(n);
    c[i] = 1;
    seen.emplace(key_of(simples[i]), int(found.size()));
    queue.push_back(int(found.size()));
    found.push_back({simples[i], c});
  }
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      ExactNumber k = ExactNumber(2) * inner(found[cur].v, simples[i]) / norms[i];
      if (k.is_zero()) continue;
      RootVector v = found[cur].v;
      for (int d = 0; d < rs.dim_; ++d) v[d] -= k * simples[i][d];
      auto key = key_of(v);
      if (seen.count(key)) continue;
      std::vector<ExactNumber> c = found[cur].c;
      c[i] -= k;
      seen.emplace(std::move(key), int(found.size()));
      queue.push_back(int(found.size()));
      found.push_back({std::move(v), std::move(c)});
    }
  }

  auto is_positive = [](const std::vector<ExactNumber>& c) {
    for (const auto& x : c)
      if (x.sign() != 0) return x.sign() > 0;
    return false;
  };
  std::vector<Entry> pos;
  for (auto& e : found)
    if (is_positive(e.c)) pos.push_back(e);
  if (pos.size() * 2 != found.size()) throw std::logic_error("root closure is not symmetric");
  auto height = [](const std::vector<ExactNumber>& c) {
    ExactNumber h;
    for (const auto& x : c) h += x;
    return h;
  };
  std::sort(pos.begin(), pos.end(), [&](const Entry& x, const Entry& y) {
    ExactNumber hx = height(x.c), hy = height(y.c);
    if (hx != hy) return hx < hy;
    return std::lexicographical_compare(x.v.begin(), x.v.end(), y.v.begin(), y.v.end());
  });
  const int half = static_cast<int>(pos.size());
  rs.roots_.resize(2 * half);
  rs.coeffs_.resize(2 * half);
  for (int r = 0; r < half; ++r) {
    rs.roots_[r] = pos[r].v;
    rs.coeffs_[r] = pos[r].c;
    rs.roots_[r + half] = negate(pos[r].v);
    for (const auto& x : pos[r].c) rs.coeffs_[r + half].push_back(-x);
  }
  for (int r = 0; r < 2 * half; ++r) rs.index_.emplace(key_of(rs.roots_[r]), r);
  for (const auto& v : simples) rs.simple_.push_back(rs.find(v));
  for (int i = 0; i < n; ++i) rs.gens_.push_back(rs.reflection(rs.simple_[i]));
  return rs;
}

RootSystem RootSystem::dihedral(int m) {
  if (m < 3) throw std::invalid_argument("dihedral order parameter must be >= 3");
  RootSystem rs;
  rs.type_ = IsoType{Family::I, 2, m};
  rs.simple_ = {0, m - 1};
  for (int j : rs.simple_) {
    std::vector<std::uint16_t> p(2 * m);
    for (int k = 0; k < 2 * m; ++k) p[k] = static_cast<std::uint16_t>(((m + 2 * j - k) % (2 * m) + 2 * m) % (2 * m));
    rs.gens_.emplace_back(std::move(p));
  }
  return rs;
}

std::vector<RootVector> RootSystem::simples() const {
  std::vector<RootVector> out;
  if (abstract()) return out;
  for (int i : simple_) out.push_back(roots_[i]);
  return out;
}

ExactNumber RootSystem::height(int r) const {
  if (abstract()) throw std::logic_error("abstract model has no coordinates");
  ExactNumber h;
  for (const auto& x : coeffs_[r]) h += x;
  return h;
}

int RootSystem::find(const RootVector& v) const {
  auto it = index_.find(key_of(v));
  return it == index_.end() ? -1 : it->second;
}

GroupElement RootSystem::reflection(int r) const {
  const int n = size() == 0 ? static_cast<int>(roots_.size()) : size();
  if (abstract()) {
    const int m = n / 2;
    std::vector<std::uint16_t> p(n);
    for (int k = 0; k < n; ++k) p[k] = static_cast<std::uint16_t>(((m + 2 * r - k) % n + n) % n);
    return GroupElement(std::move(p));
  }
  std::vector<std::uint16_t> p(n);
  for (int u = 0; u < n; ++u) {
    int img = find(reflect(roots_[u], roots_[r]));
    if (img < 0) throw std::logic_error("root list not closed under reflection");
    p[u] = static_cast<std::uint16_t>(img);
  }
  return GroupElement(std::move(p));
}

RootSystem root_system(const IsoType& t) {
  if (!t.finite()) throw std::invalid_argument(t.name() + " is not finite");
  if (t.family == Family::I) throw std::invalid_argument("no exact root system for " + t.name());
  return RootSystem::make(t);
}

GroupElement word_to_element(const RootSystem& rs, const Word& w) {
  GroupElement g = GroupElement::identity(rs.size());
  for (int i : w) {
    if (i < 0 || i >= rs.rank()) throw std::out_of_range("generator index " + std::to_string(i) + " out of range");
    g = g * rs.generator(i);
  }
  return g;
}

GroupElement word_to_element(const IsoType& t, const Word& w) {
  return word_to_element(t.family == Family::I ? RootSystem::dihedral(t.m) : root_system(t), w);
}

ReflectionWord express_reflection_word(const RootSystem& rs, const RootVector& v) {
  int r = rs.find(v);
  if (r < 0) throw std::invalid_argument("not a root: " + to_string(v));
  return express_reflection_word(rs, r);
}

ReflectionWord express_reflection_word(const RootSystem& rs, int r) {
  if (r < 0 || r >= rs.size()) throw std::invalid_argument("root index out of range");
  if (!rs.positive(r)) r = rs.negative(r);
  const int m = rs.size() / 2;
  auto positive_inner = [&](int root, int i) {
    if (!rs.abstract()) return inner(rs.root(root), rs.root(rs.simple(i))).sign() > 0;
    int d = root - rs.simple(i);
    return 2 * std::abs(d) < m;
  };
  ReflectionWord out;
  for (;;) {
    for (int i = 0; i < rs.rank(); ++i)
      if (rs.simple(i) == r) {
        out.simple_index = i;
        return out;
      }
    int step = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (positive_inner(r, i)) {
        step = i;
        break;
      }
    if (step < 0) throw std::logic_error("no descending simple root");
    r = rs.generator(step)[r];
    out.word.push_back(step);
  }
}

Word reflection_as_word(const ReflectionWord& rw) { return concat({rw.word, {rw.simple_index}, inverse(rw.word)}); }

}  // namespace hypcox
