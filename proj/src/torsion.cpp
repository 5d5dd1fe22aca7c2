#include "hypcox/torsion.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hypcox {

// ---------------------------------------------------------------- diagrams

int CarterDiagram::nodes() const { return std::accumulate(paths.begin(), paths.end(), 0); }

namespace {

// (component, position) of each flattened node
std::pair<int, int> locate(const std::vector<int>& paths, int a) {
  for (int c = 0; c < static_cast<int>(paths.size()); ++c) {
    if (a < paths[c]) return {c, a};
    a -= paths[c];
  }
  throw std::out_of_range("diagram node out of range");
}

}  // namespace

bool CarterDiagram::adjacent(int a, int b) const {
  auto [ca, pa] = locate(paths, a);
  auto [cb, pb] = locate(paths, b);
  return ca == cb && std::abs(pa - pb) == 1;
}

int CarterDiagram::position(int a) const { return locate(paths, a).second; }

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

RootVector e(int d, int i) {
  RootVector v(d);
  v[i - 1] = 1;
  return v;
}

RootVector e_minus(int d, int i, int j) {
  RootVector v = e(d, i);
  v[j - 1] -= 1;
  return v;
}

RootVector e_plus(int d, int i, int j) {
  RootVector v = e(d, i);
  v[j - 1] += 1;
  return v;
}

RootVector halves(std::initializer_list<int> signs) {
  RootVector v;
  for (int s : signs) v.emplace_back(Rational(s, 2));
  return v;
}

std::string tag(const IsoType& t, int p, const std::string& rest) {
  return t.name() + ":p=" + std::to_string(p) + ":" + rest;
}

CarterDiagram paths_of(const IsoType& t, int p, int k, int len) {
  CarterDiagram d;
  d.prime = p;
  d.paths.assign(k, len);
  d.source = tag(t, p, "k=" + std::to_string(k));
  return d;
}

CarterDiagram labelled(const IsoType& t, int p, std::vector<RootVector> labels, const std::string& what) {
  CarterDiagram d;
  d.prime = p;
  d.paths.assign(labels.size(), 1);
  d.labels = std::move(labels);
  d.source = tag(t, p, what);
  return d;
}

// Every path of p-1 nodes, k copies, kp <= bound, for odd primes up to bound.
void odd_paths(std::vector<CarterDiagram>& out, const IsoType& t, int bound) {
  for (int p = 3; p <= bound; ++p) {
    if (!is_prime(p)) continue;
    for (int k = 1; k * p <= bound; ++k) out.push_back(paths_of(t, p, k, p - 1));
  }
}

}  // namespace

std::vector<CarterDiagram> prime_class_diagrams(const IsoType& t) {
  std::vector<CarterDiagram> out;
  const int n = t.rank;
  switch (t.family) {
    case Family::A:
      for (int p = 2; p <= n + 1; ++p) {
        if (!is_prime(p)) continue;
        for (int k = 1; k * p <= n + 1; ++k) out.push_back(paths_of(t, p, k, p - 1));
      }
      break;
    case Family::B:
      for (int k = 0; 2 * k <= n; ++k)
        for (int m = 0; 2 * k + m <= n; ++m) {
          if (k + m == 0) continue;
          std::vector<RootVector> labels;
          for (int i = 1; i <= k; ++i) labels.push_back(e_minus(n, 2 * i - 1, 2 * i));
          for (int j = 1; j <= m; ++j) labels.push_back(e(n, 2 * k + j));
          out.push_back(labelled(t, 2, std::move(labels), "k=" + std::to_string(k) + ",m=" + std::to_string(m)));
        }
      odd_paths(out, t, n);
      break;
    case Family::D:
      for (int k = 0; 2 * k <= n; ++k)
        for (int m = 0; 2 * (k + m) <= n; ++m) {
          if (k + m == 0) continue;
          std::string what = "k=" + std::to_string(k) + ",m=" + std::to_string(m);
          std::vector<RootVector> labels;
          for (int i = 1; i <= k; ++i) labels.push_back(e_minus(n, 2 * i - 1, 2 * i));
          if (n % 2 == 0 && m == 0 && 2 * k == n) {
            auto minus = labels;
            labels.back() = e_plus(n, n - 1, n);
            out.push_back(labelled(t, 2, std::move(minus), what + ",-"));
            out.push_back(labelled(t, 2, std::move(labels), what + ",+"));
            continue;
          }
          for (int l = 1; l <= m; ++l) {
            int j = 2 * k + 2 * l - 1;
            labels.push_back(e_minus(n, j, j + 1));
            labels.push_back(e_plus(n, j, j + 1));
          }
          out.push_back(labelled(t, 2, std::move(labels), what));
        }
      odd_paths(out, t, n);
      break;
    case Family::E: {
      const int d = 8;
      int involutions = n == 6 ? 4 : n;
      for (int k = 1; k <= involutions; ++k) {
        if (n == 7 && k == 3) {
          std::vector<RootVector> base = {e_minus(d, 1, 2), e_minus(d, 3, 4)};
          auto a = base, b = base;
          a.push_back(e_minus(d, 5, 6));
          b.push_back(e_plus(d, 5, 6));
          out.push_back(labelled(t, 2, a, "k=3,-"));
          out.push_back(labelled(t, 2, b, "k=3,+"));
        } else if (n == 7 && k == 4) {
          out.push_back(labelled(t, 2, {e_minus(d, 1, 2), e_minus(d, 3, 4), e_minus(d, 5, 6), e_minus(d, 7, 8)}, "k=4,a"));
          out.push_back(labelled(t, 2,
                                 {e_plus(d, 1, 2), e_plus(d, 3, 4), e_plus(d, 5, 6), halves({1, -1, 1, -1, 1, -1, 1, -1})},
                                 "k=4,b"));
        } else if (n == 8 && k == 4) {
          std::vector<RootVector> base = {e_minus(d, 1, 2), e_minus(d, 3, 4), e_minus(d, 5, 6)};
          auto a = base, b = base;
          a.push_back(e_minus(d, 7, 8));
          b.push_back(e_plus(d, 7, 8));
          out.push_back(labelled(t, 2, a, "k=4,-"));
          out.push_back(labelled(t, 2, b, "k=4,+"));
        } else {
          out.push_back(paths_of(t, 2, k, 1));
        }
      }
      int threes = n == 8 ? 4 : 3;
      for (int k = 1; k <= threes; ++k) out.push_back(paths_of(t, 3, k, 2));
      out.push_back(paths_of(t, 5, 1, 4));
      if (n == 8) out.push_back(paths_of(t, 5, 2, 4));
      if (n >= 7) out.push_back(paths_of(t, 7, 1, 6));
      break;
    }
    case Family::F: {
      const int d = 4;
      RootVector half = halves({1, 1, 1, 1});
      out.push_back(labelled(t, 2, {e_minus(d, 1, 2)}, "e1-e2"));
      out.push_back(labelled(t, 2, {e(d, 1)}, "e1"));
      out.push_back(labelled(t, 2, {e_minus(d, 1, 2), e_minus(d, 3, 4)}, "e1-e2,e3-e4"));
      out.push_back(labelled(t, 2, {e_minus(d, 1, 2), e(d, 3)}, "e1-e2,e3"));
      out.push_back(labelled(t, 2, {e_minus(d, 1, 2), e_minus(d, 3, 4), e_plus(d, 3, 4)}, "e1-e2,e3-e4,e3+e4"));
      out.push_back(labelled(t, 2, {e_minus(d, 1, 2), e_minus(d, 3, 4), half}, "e1-e2,e3-e4,h"));
      out.push_back(labelled(t, 2, {e_minus(d, 1, 2), e_plus(d, 1, 2), e_minus(d, 3, 4), e_plus(d, 3, 4)}, "-1"));
      CarterDiagram long_path;
      long_path.prime = 3;
      long_path.paths = {2};
      long_path.labels = {e_minus(d, 1, 2), e_minus(d, 2, 3)};
      long_path.source = tag(t, 3, "long");
      CarterDiagram short_path = long_path;
      short_path.labels = {e(d, 4), half};
      short_path.source = tag(t, 3, "short");
      CarterDiagram both = long_path;
      both.paths = {2, 2};
      both.labels.insert(both.labels.end(), short_path.labels.begin(), short_path.labels.end());
      both.source = tag(t, 3, "long+short");
      out.push_back(long_path);
      out.push_back(short_path);
      out.push_back(both);
      break;
    }
    default:
      throw std::invalid_argument("no Carter diagrams for " + t.name());
  }
  return out;
}

// ---------------------------------------------------------------- labelling

namespace {

// 4<u,v>^2 / (<u,u><v,v>), the diagram edge mark minus 2.
QSqrt5 bond(const RootVector& u, const RootVector& v) {
  QSqrt5 c = inner(u, v);
  return QSqrt5(4) * c * c / (inner(u, u) * inner(v, v));
}

bool compatible(const CarterDiagram& d, const RootSystem& rs, const std::vector<int>& roots, int a, int r) {
  for (int b = 0; b < a; ++b) {
    if (roots[b] == r || roots[b] == rs.negative(r)) return false;
    QSqrt5 want = d.adjacent(a, b) ? QSqrt5(1) : QSqrt5(0);
    if (bond(rs.root(roots[b]), rs.root(r)) != want) return false;
  }
  return true;
}

bool search(const CarterDiagram& d, const RootSystem& rs, const std::vector<int>& pool, std::vector<int>& roots, int a) {
  if (a == d.nodes()) return true;
  for (int r : pool) {
    if (!compatible(d, rs, roots, a, r)) continue;
    roots[a] = r;
    if (search(d, rs, pool, roots, a + 1)) return true;
  }
  roots[a] = -1;
  return false;
}

}  // namespace

LabelledDiagram label_diagram(const CarterDiagram& d, const RootSystem& rs) {
  if (rs.abstract()) throw std::invalid_argument("diagram labelling needs an exact root system");
  LabelledDiagram ld{d, std::vector<int>(d.nodes(), -1)};
  const int k = d.nodes();
  if (!d.labels.empty()) {
    if (static_cast<int>(d.labels.size()) != k) throw std::logic_error("label count mismatch in " + d.source);
    for (int a = 0; a < k; ++a) {
      int r = rs.find(d.labels[a]);
      if (r < 0) throw std::logic_error("prescribed label is not a root in " + d.source);
      if (!compatible(d, rs, ld.roots, a, r)) throw std::logic_error("prescribed labels violate the diagram in " + d.source);
      ld.roots[a] = r;
    }
    return ld;
  }
  std::vector<int> simples;
  for (int i = 0; i < rs.rank(); ++i) simples.push_back(rs.simple(i));
  if (search(d, rs, simples, ld.roots, 0)) return ld;
  std::vector<int> positives(rs.size() / 2);
  std::iota(positives.begin(), positives.end(), 0);
  if (search(d, rs, positives, ld.roots, 0)) return ld;
  throw std::logic_error("no labelling for " + d.source);
}

ConjClassRep diagram_element(const LabelledDiagram& ld, const RootSystem& rs) {
  const int k = ld.diagram.nodes();
  auto reflection_word = [&](int r) -> Word {
    for (int i = 0; i < rs.rank(); ++i)
      if (rs.simple(i) == r || rs.negative(rs.simple(i)) == r) return {i};
    return reflection_as_word(express_reflection_word(rs, r));
  };
  Word black, white;
  for (int a = 0; a < k; ++a) {
    Word w = reflection_word(ld.roots[a]);
    Word& side = ld.diagram.position(a) % 2 == 0 ? black : white;
    side.insert(side.end(), w.begin(), w.end());
  }
  ConjClassRep rep;
  rep.word = concat({black, white});
  GroupElement g = word_to_element(rs, rep.word);
  rep.order = element_order(g);
  rep.fixed_root_count = fixed_roots(g);
  rep.source = ld.diagram.source;
  if (rep.order != ld.diagram.prime)
    throw std::logic_error("element of " + ld.diagram.source + " has order " + std::to_string(rep.order));
  return rep;
}

// ---------------------------------------------------------------- H and I

namespace {

ConjClassRep checked(const RootSystem& rs, Word w, int order, std::string source) {
  GroupElement g = word_to_element(rs, w);
  int actual = element_order(g);
  if (actual != order) throw std::logic_error(source + " has order " + std::to_string(actual));
  return {std::move(w), order, std::move(source), fixed_roots(g)};
}

}  // namespace

std::vector<ConjClassRep> h_type_representatives(const IsoType& t) {
  if (t.family != Family::H) throw std::invalid_argument("not an H type: " + t.name());
  RootSystem rs = root_system(t);
  std::vector<ConjClassRep> out;
  auto add = [&](Word w, int p, const std::string& what) { out.push_back(checked(rs, std::move(w), p, t.name() + ":p=" + std::to_string(p) + ":" + what)); };
  if (t.rank == 3) {
    add({0}, 2, "x1");
    add({0, 2}, 2, "x1x3");
    add(power({1, 0, 2}, 5), 2, "(x2x1x3)^5");
    add({0, 1}, 3, "x1x2");
    add({1, 2}, 5, "x2x3");
    add(power({1, 2}, 2), 5, "(x2x3)^2");
    return out;
  }
  const Word w = {3, 2, 1, 0};
  const Word wbar = {3, 2, 1};
  add({0}, 2, "x1");
  add({0, 3}, 2, "x1x4");
  add(concat({{1, 0, 2, 1, 0}, power(w, 12), wbar, {3, 2, 3}}), 2, "x2x1x3x2x1.w^12.wbar.x4x3x4");
  add(concat({{0, 1, 0, 2, 1, 0}, power(w, 12), wbar, {3, 2, 3}}), 2, "x1x2x1x3x2x1.w^12.wbar.x4x3x4");
  add({0, 1}, 3, "x1x2");
  add({1, 2}, 3, "x2x3");
  CarterDiagram two_paths;
  two_paths.prime = 3;
  two_paths.paths = {2, 2};
  two_paths.source = t.name() + ":p=3:A2xA2";
  out.push_back(diagram_element(label_diagram(two_paths, rs), rs));
  add({2, 3}, 5, "x3x4");
  add(power({2, 3}, 2), 5, "(x3x4)^2");
  add(concat({{2}, power(w, 3), wbar, power(w, 2)}), 5, "x3.w^3.wbar.w^2");
  add(concat({{2}, power(w, 9), wbar, power(w, 2)}), 5, "x3.w^9.wbar.w^2");
  add(concat({{0, 1, 0, 2}, power(w, 8), wbar, {3, 2, 3}}), 5, "x1x2x1x3.w^8.wbar.x4x3x4");
  return out;
}

std::vector<ConjClassRep> dihedral_representatives(int m) {
  if (m < 3) throw std::invalid_argument("dihedral order parameter must be >= 3");
  RootSystem rs = RootSystem::dihedral(m);
  const std::string name = "I2(" + std::to_string(m) + ")";
  std::vector<ConjClassRep> out;
  out.push_back(checked(rs, {0}, 2, name + ":p=2:x1"));
  if (m % 2 == 0) out.push_back(checked(rs, {1}, 2, name + ":p=2:x2"));
  for (int l = 1; l <= m / 2; ++l) {
    int q = m / std::gcd(m, l);
    if (!is_prime(q)) continue;
    out.push_back(checked(rs, power({0, 1}, l), q, name + ":p=" + std::to_string(q) + ":(x1x2)^" + std::to_string(l)));
  }
  return out;
}

std::vector<ConjClassRep> class_representatives(const IsoType& t) {
  if (!t.finite()) throw std::invalid_argument(t.name() + " is not finite");
  switch (t.family) {
    case Family::G: {
      auto reps = dihedral_representatives(6);
      for (auto& r : reps) r.source = "G2" + r.source.substr(r.source.find(':'));
      return reps;
    }
    case Family::H: return h_type_representatives(t);
    case Family::I: return dihedral_representatives(t.m);
    default: break;
  }
  RootSystem rs = root_system(t);
  std::vector<ConjClassRep> out;
  for (const auto& d : prime_class_diagrams(t)) out.push_back(diagram_element(label_diagram(d, rs), rs));
  return out;
}

// ---------------------------------------------------------------- products

std::vector<ConjClassRep> reducible_representatives(const std::vector<FactorReps>& factors) {
  std::vector<int> primes;
  for (const auto& f : factors)
    for (const auto& r : f) primes.push_back(r.order);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  std::vector<ConjClassRep> out;
  for (int p : primes) {
    std::vector<std::vector<const ConjClassRep*>> choices(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
      for (const auto& r : factors[i])
        if (r.order == p) choices[i].push_back(&r);
    std::vector<const ConjClassRep*> pick(factors.size(), nullptr);
    std::function<void(std::size_t, bool)> walk = [&](std::size_t i, bool any) {
      if (i == factors.size()) {
        if (!any) return;
        ConjClassRep rep;
        rep.order = p;
        for (const auto* r : pick) {
          if (!r) continue;
          rep.word.insert(rep.word.end(), r->word.begin(), r->word.end());
          rep.source += (rep.source.empty() ? "" : "*") + r->source;
        }
        out.push_back(std::move(rep));
        return;
      }
      pick[i] = nullptr;
      walk(i + 1, any);
      for (const auto* r : choices[i]) {
        pick[i] = r;
        walk(i + 1, true);
      }
      pick[i] = nullptr;
    };
    walk(0, false);
  }
  return out;
}

namespace {

std::vector<ConjClassRep> cached_representatives(const IsoType& t, std::map<IsoType, std::vector<ConjClassRep>>& cache) {
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, class_representatives(t)).first;
  return it->second;
}

std::vector<ConjClassRep> reducible_with_cache(const Classification& c, std::map<IsoType, std::vector<ConjClassRep>>& cache) {
  std::vector<FactorReps> factors;
  for (const auto& comp : c.components) {
    if (comp.kind != Kind::Finite) throw std::invalid_argument("reducible_representatives: infinite component");
    FactorReps reps = cached_representatives(*comp.type, cache);
    for (auto& r : reps)
      for (int& g : r.word) g = comp.nodes[g];
    factors.push_back(std::move(reps));
  }
  return reducible_representatives(factors);
}

}  // namespace

std::vector<ConjClassRep> reducible_representatives(const Classification& c) {
  std::map<IsoType, std::vector<ConjClassRep>> cache;
  return reducible_with_cache(c, cache);
}

// ---------------------------------------------------------------- oracle

namespace {

std::uint64_t hash_bytes(const std::uint8_t* p, int n) {
  std::uint64_t h = 1469598103934665603ULL;
  for (int i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h ^ (h >> 29);
}

int perm_order(const std::uint8_t* p, int n, std::vector<char>& seen) {
  std::fill(seen.begin(), seen.end(), 0);
  long order = 1;
  for (int r = 0; r < n; ++r) {
    if (seen[r]) continue;
    long len = 0;
    for (int x = r; !seen[x]; x = p[x]) {
      seen[x] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return static_cast<int>(order);
}

bool prime(int p) { return is_prime(p); }

}  // namespace

long ClassOracle::lookup(const std::uint8_t* p) const {
  const std::size_t mask = table_.size() - 1;
  for (std::size_t slot = hash_bytes(p, degree_) & mask;; slot = (slot + 1) & mask) {
    std::int64_t idx = table_[slot];
    if (idx < 0) return -1;
    if (std::equal(p, p + degree_, data_.data() + static_cast<std::size_t>(idx) * degree_)) return static_cast<long>(idx);
  }
}

void ClassOracle::rehash() {
  std::vector<std::int64_t> fresh(std::max<std::size_t>(1024, table_.size() * 2), -1);
  const std::size_t mask = fresh.size() - 1;
  for (std::size_t i = 0; i < count_; ++i) {
    std::size_t slot = hash_bytes(data_.data() + i * degree_, degree_) & mask;
    while (fresh[slot] >= 0) slot = (slot + 1) & mask;
    fresh[slot] = static_cast<std::int64_t>(i);
  }
  table_.swap(fresh);
}

std::size_t ClassOracle::insert(const std::uint8_t* p) {
  if ((count_ + 1) * 2 > table_.size()) rehash();
  data_.insert(data_.end(), p, p + degree_);
  const std::size_t mask = table_.size() - 1;
  std::size_t slot = hash_bytes(p, degree_) & mask;
  while (table_[slot] >= 0) slot = (slot + 1) & mask;
  table_[slot] = static_cast<std::int64_t>(count_);
  return count_++;
}

ClassOracle ClassOracle::build(const std::vector<GroupElement>& gens, std::size_t max_elements) {
  ClassOracle o;
  if (gens.empty()) throw std::invalid_argument("no generators");
  o.degree_ = gens[0].size();
  if (o.degree_ > 256) throw std::invalid_argument("oracle supports degree <= 256");
  const int n = o.degree_;
  std::vector<std::vector<std::uint8_t>> g8;
  for (const auto& g : gens) {
    if (g.size() != n) throw std::invalid_argument("generator degree mismatch");
    g8.emplace_back(g.perm().begin(), g.perm().end());
  }
  std::vector<std::uint8_t> buf(n);
  std::iota(buf.begin(), buf.end(), 0);
  o.rehash();
  o.insert(buf.data());
  for (std::size_t i = 0; i < o.count_; ++i) {
    for (const auto& s : g8) {
      const std::uint8_t* cur = o.data_.data() + i * n;
      for (int r = 0; r < n; ++r) buf[r] = s[cur[r]];
      if (o.lookup(buf.data()) >= 0) continue;
      if (o.count_ >= max_elements) throw std::length_error("group exceeds the element bound");
      o.insert(buf.data());
    }
  }

  o.class_id_.assign(o.count_, -1);
  std::vector<char> seen(n);
  std::vector<int> orders(o.count_);
  for (std::size_t i = 0; i < o.count_; ++i) orders[i] = perm_order(o.data_.data() + i * n, n, seen);
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < o.count_; ++i) {
    if (o.class_id_[i] >= 0 || !prime(orders[i])) continue;
    const int id = static_cast<int>(o.classes_.size());
    OracleClass c;
    c.order = orders[i];
    c.representative = i;
    const std::uint8_t* rep = o.data_.data() + i * n;
    for (int r = 0; r < n; ++r) c.fixed_points += rep[r] == r;
    queue.assign(1, i);
    o.class_id_[i] = id;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (const auto& s : g8) {
        const std::uint8_t* g = o.data_.data() + queue[q] * n;
        for (int r = 0; r < n; ++r) buf[r] = s[g[s[r]]];
        long j = o.lookup(buf.data());
        if (j < 0) throw std::logic_error("element table not closed");
        if (o.class_id_[j] >= 0) continue;
        o.class_id_[j] = id;
        queue.push_back(static_cast<std::size_t>(j));
      }
    }
    c.size = queue.size();
    o.classes_.push_back(c);
  }
  return o;
}

GroupElement ClassOracle::element(std::size_t i) const {
  const std::uint8_t* p = data_.data() + i * degree_;
  return GroupElement(std::vector<std::uint16_t>(p, p + degree_));
}

long ClassOracle::find(const GroupElement& g) const {
  if (g.size() != degree_) return -1;
  std::vector<std::uint8_t> buf(g.perm().begin(), g.perm().end());
  return lookup(buf.data());
}

int ClassOracle::class_of(const GroupElement& g) const {
  long i = find(g);
  return i < 0 ? -1 : class_id_[i];
}

std::vector<GroupElement> type_generators(const IsoType& t) {
  RootSystem rs = t.family == Family::I ? RootSystem::dihedral(t.m) : root_system(t);
  std::vector<GroupElement> gens;
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(rs.generator(i));
  return gens;
}

ClassOracle brute_force_classes(const IsoType& t, std::size_t max_order) {
  if (group_order(t) > max_order) throw std::length_error(t.name() + " exceeds the oracle order bound");
  return ClassOracle::build(type_generators(t), max_order);
}

std::vector<GroupElement> conjugacy_class(const std::vector<GroupElement>& gens, const GroupElement& g,
                                          std::size_t max_size) {
  std::set<std::vector<std::uint16_t>> seen = {g.perm()};
  std::vector<GroupElement> out = {g};
  for (std::size_t q = 0; q < out.size(); ++q)
    for (const auto& s : gens) {
      GroupElement h = s * out[q] * s;
      if (!seen.insert(h.perm()).second) continue;
      if (out.size() >= max_size) throw std::length_error("conjugacy class exceeds the bound");
      out.push_back(std::move(h));
    }
  return out;
}

// ---------------------------------------------------------------- inventory

TorsionInventory inventory(const CoxeterSymbol& sym) {
  TorsionInventory inv;
  SphericalPoset poset = spherical_poset(sym);
  std::map<IsoType, std::vector<ConjClassRep>> cache;
  for (int i : poset.maximal()) {
    const auto& el = poset.elements()[i];
    for (auto& rep : reducible_with_cache(el.classification, cache))
      inv.entries.push_back({std::move(rep.word), rep.order, el.subset, std::move(rep.source)});
  }
  return inv;
}

}  // namespace hypcox
