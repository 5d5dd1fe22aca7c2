#include "hypcox/symbol.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace hypcox {

// ---------------------------------------------------------------- SubsetId

SubsetId SubsetId::of(const std::vector<int>& indices) {
  std::uint64_t bits = 0;
  for (int i : indices) {
    if (i < 0 || i >= kMaxRank) throw std::out_of_range("generator index out of range");
    bits |= 1ULL << i;
  }
  return SubsetId(bits);
}

std::vector<int> SubsetId::indices() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(__builtin_ctzll(b));
  return out;
}

// ---------------------------------------------------------------- CoxeterSymbol

CoxeterSymbol::CoxeterSymbol(std::vector<std::string> generators) : names_(std::move(generators)) {
  const int n = rank();
  if (n > kMaxRank) throw std::invalid_argument("rank exceeds 64");
  std::set<std::string> seen;
  for (const auto& g : names_)
    if (!seen.insert(g).second) throw std::invalid_argument("duplicate generator " + g);
  m_.assign(static_cast<std::size_t>(n) * n, 2);
  for (int i = 0; i < n; ++i) m_[i * n + i] = 1;
  adj_.assign(n, 0);
}

void CoxeterSymbol::set_edge(int a, int b, EdgeLabel m) {
  const int n = rank();
  if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("unknown generator");
  if (a == b) throw std::invalid_argument("self-edge on " + names_[a]);
  if (m != kInfinity && m < 2) throw std::invalid_argument("edge label must be >= 3 or inf");
  m_[a * n + b] = m;
  m_[b * n + a] = m;
  if (m == 2) {
    adj_[a] &= ~(1ULL << b);
    adj_[b] &= ~(1ULL << a);
  } else {
    adj_[a] |= 1ULL << b;
    adj_[b] |= 1ULL << a;
  }
}

int CoxeterSymbol::index_of(std::string_view name) const {
  for (int i = 0; i < rank(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

std::vector<std::tuple<int, int, EdgeLabel>> CoxeterSymbol::edges() const {
  std::vector<std::tuple<int, int, EdgeLabel>> out;
  for (int a = 0; a < rank(); ++a)
    for (int b = a + 1; b < rank(); ++b)
      if (adjacent(a, b)) out.emplace_back(a, b, label(a, b));
  return out;
}

// ---------------------------------------------------------------- DSL

namespace {

struct Token {
  std::string text;
  int line;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == ';' || c == ':') {
      out.push_back({std::string(1, c), line});
      ++i;
    } else {
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
             text[j] != ';' && text[j] != ':' && text[j] != '#')
        ++j;
      out.push_back({std::string(text.substr(i, j - i)), line});
      i = j;
    }
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

EdgeLabel parse_label(const Token& t) {
  if (t.text == "inf" || t.text == "INF" || t.text == "infinity") return kInfinity;
  if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(),
                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    fail(t.line, "edge label must be an integer >= 3 or inf, got '" + t.text + "'");
  if (t.text.size() > 9) fail(t.line, "edge label too large");
  int m = std::stoi(t.text);
  if (m < 3) fail(t.line, "edge label must be >= 3, got " + t.text);
  return m;
}

}  // namespace

CoxeterSymbol parse_symbol(std::string_view text) {
  auto toks = tokenize(text);
  std::size_t pos = 0;
  auto at_end = [&] { return pos >= toks.size(); };
  auto next = [&]() -> const Token& {
    if (at_end()) fail(toks.empty() ? 1 : toks.back().line, "unexpected end of input");
    return toks[pos++];
  };

  if (at_end()) throw ParseError("empty symbol: expected 'gens'");
  const Token& head = next();
  if (head.text != "gens") fail(head.line, "expected 'gens', got '" + head.text + "'");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (;;) {
    const Token& t = next();
    if (t.text == ";") break;
    if (t.text == ":") fail(t.line, "unexpected ':' in gens");
    if (!seen.insert(t.text).second) fail(t.line, "duplicate generator '" + t.text + "'");
    names.push_back(t.text);
  }
  if (names.empty()) fail(head.line, "gens needs at least one generator");
  if (names.size() > static_cast<std::size_t>(kMaxRank)) fail(head.line, "more than 64 generators");

  CoxeterSymbol sym(names);
  std::map<std::pair<int, int>, EdgeLabel> declared;
  while (!at_end()) {
    const Token& kw = next();
    if (kw.text != "edge") fail(kw.line, "expected 'edge', got '" + kw.text + "'");
    const Token& ta = next();
    const Token& tb = next();
    const Token& colon = next();
    if (colon.text != ":") fail(colon.line, "expected ':' after edge endpoints");
    const Token& tm = next();
    const Token& semi = next();
    if (semi.text != ";") fail(semi.line, "expected ';' after edge label");
    int a = sym.index_of(ta.text);
    int b = sym.index_of(tb.text);
    if (a < 0) fail(ta.line, "unknown generator '" + ta.text + "'");
    if (b < 0) fail(tb.line, "unknown generator '" + tb.text + "'");
    if (a == b) fail(ta.line, "self-edge on '" + ta.text + "'");
    EdgeLabel m = parse_label(tm);
    auto key = std::minmax(a, b);
    auto [it, fresh] = declared.emplace(key, m);
    if (!fresh && it->second != m) fail(kw.line, "conflicting labels for edge " + ta.text + " " + tb.text);
    sym.set_edge(a, b, m);
  }
  return sym;
}

CoxeterSymbol load_symbol(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_symbol(ss.str());
}

std::string emit_symbol(const CoxeterSymbol& sym) {
  std::string out = "gens";
  for (const auto& g : sym.generators()) out += " " + g;
  out += ";\n";
  std::vector<std::tuple<std::string, std::string, EdgeLabel>> rows;
  for (auto [a, b, m] : sym.edges()) {
    std::string x = sym.name(a), y = sym.name(b);
    if (y < x) std::swap(x, y);
    rows.emplace_back(x, y, m);
  }
  std::sort(rows.begin(), rows.end());
  for (const auto& [x, y, m] : rows)
    out += "edge " + x + " " + y + " : " + (m == kInfinity ? std::string("inf") : std::to_string(m)) + ";\n";
  return out;
}

std::string subset_names(const CoxeterSymbol& sym, SubsetId sub, std::string_view sep) {
  std::string out;
  for (int i : sub.indices()) {
    if (!out.empty()) out += sep;
    out += sym.name(i);
  }
  return out;
}

CoxeterSymbol induced_subsymbol(const CoxeterSymbol& sym, SubsetId sub) {
  auto idx = sub.indices();
  for (int i : idx)
    if (i >= sym.rank()) throw std::out_of_range("subset index " + std::to_string(i) + " out of range");
  std::vector<std::string> names;
  for (int i : idx) names.push_back(sym.name(i));
  CoxeterSymbol out(names);
  for (std::size_t p = 0; p < idx.size(); ++p)
    for (std::size_t q = p + 1; q < idx.size(); ++q)
      if (sym.adjacent(idx[p], idx[q])) out.set_edge(int(p), int(q), sym.label(idx[p], idx[q]));
  return out;
}

// ---------------------------------------------------------------- IsoType

std::string IsoType::name() const {
  static const char* kLetters = "ABDEFGHI";
  if (family == Family::I) return "I2(" + std::to_string(m) + ")";
  if (finite()) return std::string(1, kLetters[static_cast<int>(family)]) + std::to_string(rank);
  static const char* kAffine = "ABCDEFG";
  int k = static_cast<int>(family) - static_cast<int>(Family::AffineA);
  return std::string("~") + kAffine[k] + std::to_string(rank);
}

IsoType IsoType::make(Family f, int rank, int m) {
  auto bad = [&] { throw std::invalid_argument("invalid Coxeter type parameters"); };
  switch (f) {
    case Family::A: if (rank < 1) bad(); break;
    case Family::B: if (rank < 2) bad(); break;
    case Family::D: if (rank < 4) bad(); break;
    case Family::E: if (rank < 6 || rank > 8) bad(); break;
    case Family::F: if (rank != 4) bad(); break;
    case Family::G: if (rank != 2) bad(); break;
    case Family::H: if (rank < 3 || rank > 4) bad(); break;
    case Family::I:
      if (rank != 2 || m < 3) bad();
      if (m == 3) return {Family::A, 2, 0};
      if (m == 4) return {Family::B, 2, 0};
      if (m == 6) return {Family::G, 2, 0};
      return {Family::I, 2, m};
    case Family::AffineA: if (rank < 1) bad(); break;
    case Family::AffineB: if (rank < 3) bad(); break;
    case Family::AffineC: if (rank < 2) bad(); break;
    case Family::AffineD: if (rank < 4) bad(); break;
    case Family::AffineE: if (rank < 6 || rank > 8) bad(); break;
    case Family::AffineF: if (rank != 4) bad(); break;
    case Family::AffineG: if (rank != 2) bad(); break;
  }
  return {f, rank, 0};
}

IsoType IsoType::parse(std::string_view text) {
  std::string s(text);
  bool affine = !s.empty() && s[0] == '~';
  if (affine) s.erase(0, 1);
  if (s.size() < 2) throw std::invalid_argument("bad type name");
  if (!affine && s[0] == 'I') {
    auto open = s.find('(');
    auto close = s.find(')');
    if (s.rfind("I2(", 0) != 0 || close == std::string::npos) throw std::invalid_argument("bad type name");
    return make(Family::I, 2, std::stoi(s.substr(open + 1, close - open - 1)));
  }
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad type name: " + std::string(text));
  }
  static const std::string kFinite = "ABDEFGH";
  static const std::string kAff = "ABCDEFG";
  if (affine) {
    auto k = kAff.find(s[0]);
    if (k == std::string::npos) throw std::invalid_argument("bad type name");
    return make(static_cast<Family>(static_cast<int>(Family::AffineA) + int(k)), rank);
  }
  auto k = kFinite.find(s[0]);
  if (k == std::string::npos) throw std::invalid_argument("bad type name");
  return make(static_cast<Family>(k), rank);
}

CoxeterSymbol canonical_symbol(const IsoType& t) {
  const int k = t.nodes();
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back("x" + std::to_string(i + 1));
  CoxeterSymbol s(names);
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) s.set_edge(i, i + 1, 3);
  };
  const int n = t.rank;
  switch (t.family) {
    case Family::A: chain(0, n - 1); break;
    case Family::B: chain(0, n - 1); s.set_edge(n - 2, n - 1, 4); break;
    case Family::D: chain(0, n - 2); s.set_edge(n - 3, n - 1, 3); break;
    case Family::E:
      chain(0, n - 2);
      // Branch node: x3 for E6, x4 for E7, x5 for E8.
      s.set_edge(n - 4, n - 1, 3);
      break;
    case Family::F: chain(0, 3); s.set_edge(1, 2, 4); break;
    case Family::G: s.set_edge(0, 1, 6); break;
    case Family::H: chain(0, n - 1); s.set_edge(n - 2, n - 1, 5); break;
    case Family::I: s.set_edge(0, 1, t.m); break;
    case Family::AffineA:
      if (n == 1) {
        s.set_edge(0, 1, kInfinity);
      } else {
        chain(0, n);
        s.set_edge(n, 0, 3);
      }
      break;
    case Family::AffineB:
      chain(0, n - 1);
      s.set_edge(n - 2, n - 1, 4);
      s.set_edge(1, n, 3);
      break;
    case Family::AffineC:
      chain(0, n);
      s.set_edge(0, 1, 4);
      s.set_edge(n - 1, n, 4);
      break;
    case Family::AffineD:
      chain(0, n - 2);
      s.set_edge(1, n - 1, 3);
      s.set_edge(n - 3, n, 3);
      break;
    case Family::AffineE:
      if (n == 6) {
        chain(0, 4);
        s.set_edge(2, 5, 3);
        s.set_edge(5, 6, 3);
      } else if (n == 7) {
        chain(0, 6);
        s.set_edge(3, 7, 3);
      } else {
        chain(0, 7);
        s.set_edge(5, 8, 3);
      }
      break;
    case Family::AffineF: chain(0, 4); s.set_edge(2, 3, 4); break;
    case Family::AffineG: chain(0, 2); s.set_edge(1, 2, 6); break;
  }
  return s;
}

// ---------------------------------------------------------------- classification

bool Classification::finite() const {
  return std::all_of(components.begin(), components.end(),
                     [](const Component& c) { return c.kind == Kind::Finite; });
}

bool Classification::affine() const {
  return !components.empty() && std::all_of(components.begin(), components.end(),
                                            [](const Component& c) { return c.kind == Kind::Affine; });
}

std::string Classification::name() const {
  if (components.empty()) return "A0";
  std::string out;
  for (const auto& c : components) {
    if (c.kind == Kind::Other) return "OTHER";
    if (!out.empty()) out += "x";
    out += c.type->name();
  }
  return out;
}

namespace {

struct Fingerprint {
  std::vector<int> degrees;
  std::vector<EdgeLabel> labels;
  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.degrees == b.degrees && a.labels == b.labels;
  }
};

Fingerprint fingerprint(const CoxeterSymbol& sym, const std::vector<int>& nodes, std::uint64_t mask) {
  Fingerprint f;
  for (int v : nodes) {
    f.degrees.push_back(__builtin_popcountll(sym.neighbours(v) & mask));
    for (int w : nodes)
      if (v < w && sym.adjacent(v, w)) f.labels.push_back(sym.label(v, w));
  }
  std::sort(f.degrees.begin(), f.degrees.end());
  std::sort(f.labels.begin(), f.labels.end());
  return f;
}

std::vector<IsoType> candidates(int k, const std::vector<EdgeLabel>& labels, const ClassifyOptions& opts) {
  std::vector<IsoType> out;
  auto add = [&](Family f, int r, int m = 0) {
    try {
      out.push_back(IsoType::make(f, r, m));
    } catch (const std::invalid_argument&) {
    }
  };
  if (k == 1) {
    add(Family::A, 1);
    return out;
  }
  if (k == 2) {
    EdgeLabel m = labels.empty() ? 2 : labels[0];
    if (m == kInfinity) {
      if (opts.infinity_is_affine) add(Family::AffineA, 1);
    } else if (m >= 3) {
      add(Family::I, 2, m);
    }
    return out;
  }
  add(Family::A, k);
  add(Family::B, k);
  add(Family::D, k);
  add(Family::E, k);
  add(Family::F, k);
  add(Family::H, k);
  add(Family::AffineA, k - 1);
  add(Family::AffineB, k - 1);
  add(Family::AffineC, k - 1);
  add(Family::AffineD, k - 1);
  add(Family::AffineE, k - 1);
  add(Family::AffineF, k - 1);
  add(Family::AffineG, k - 1);
  return out;
}

// Lexicographically least label-preserving isomorphism from the canonical
// symbol onto the component; empty when none exists.
std::vector<int> find_isomorphism(const CoxeterSymbol& canon, const CoxeterSymbol& sym,
                                  const std::vector<int>& nodes, std::uint64_t mask) {
  const int k = canon.rank();
  std::vector<int> map(k, -1);
  std::uint64_t used = 0;
  std::vector<int> canon_deg(k);
  for (int c = 0; c < k; ++c) canon_deg[c] = __builtin_popcountll(canon.neighbours(c));

  std::function<bool(int)> extend = [&](int c) -> bool {
    if (c == k) return true;
    int anchor = -1;
    for (int d = 0; d < c; ++d)
      if (canon.adjacent(c, d)) {
        anchor = d;
        break;
      }
    std::uint64_t pool = anchor < 0 ? mask : (sym.neighbours(map[anchor]) & mask);
    pool &= ~used;
    for (std::uint64_t b = pool; b != 0; b &= b - 1) {
      int v = __builtin_ctzll(b);
      if (__builtin_popcountll(sym.neighbours(v) & mask) != canon_deg[c]) continue;
      bool ok = true;
      for (int d = 0; d < c && ok; ++d) ok = sym.label(v, map[d]) == canon.label(c, d);
      if (!ok) continue;
      map[c] = v;
      used |= 1ULL << v;
      if (extend(c + 1)) return true;
      used &= ~(1ULL << v);
    }
    map[c] = -1;
    return false;
  };
  (void)nodes;
  if (!extend(0)) return {};
  return map;
}

Component match_component(const CoxeterSymbol& sym, std::uint64_t mask, const ClassifyOptions& opts) {
  std::vector<int> nodes = SubsetId(mask).indices();
  Fingerprint fp = fingerprint(sym, nodes, mask);
  for (const IsoType& t : candidates(int(nodes.size()), fp.labels, opts)) {
    CoxeterSymbol canon = canonical_symbol(t);
    std::vector<int> all(canon.rank());
    for (int i = 0; i < canon.rank(); ++i) all[i] = i;
    if (!(fingerprint(canon, all, SubsetId::full(canon.rank()).bits()) == fp)) continue;
    auto iso = find_isomorphism(canon, sym, nodes, mask);
    if (iso.empty()) continue;
    return {t.finite() ? Kind::Finite : Kind::Affine, t, std::move(iso)};
  }
  return {Kind::Other, std::nullopt, std::move(nodes)};
}

}  // namespace

Classification classify_subset(const CoxeterSymbol& sym, SubsetId sub, const ClassifyOptions& opts) {
  if (!sub.subset_of(SubsetId::full(sym.rank()))) throw std::out_of_range("subset outside symbol");
  Classification out;
  std::uint64_t left = sub.bits();
  while (left != 0) {
    std::uint64_t comp = left & (~left + 1);
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t grow = 0;
      for (std::uint64_t b = frontier; b != 0; b &= b - 1) grow |= sym.neighbours(__builtin_ctzll(b));
      grow &= sub.bits() & ~comp;
      comp |= grow;
      frontier = grow;
    }
    left &= ~comp;
    out.components.push_back(match_component(sym, comp, opts));
  }
  return out;
}

Classification classify(const CoxeterSymbol& sym, const ClassifyOptions& opts) {
  return classify_subset(sym, SubsetId::full(sym.rank()), opts);
}

BigInt group_order(const IsoType& t) {
  auto factorial = [](int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  auto pow2 = [](int n) {
    BigInt p = 1;
    p <<= n;
    return p;
  };
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return factorial(n + 1);
    case Family::B: return pow2(n) * factorial(n);
    case Family::D: return pow2(n - 1) * factorial(n);
    case Family::E: return n == 6 ? BigInt(51840) : n == 7 ? BigInt(2903040) : BigInt(696729600);
    case Family::F: return 1152;
    case Family::G: return 12;
    case Family::H: return n == 3 ? BigInt(120) : BigInt(14400);
    case Family::I: return 2 * t.m;
    default: throw std::invalid_argument("group_order: " + t.name() + " is not finite");
  }
}

BigInt group_order(const Classification& c) {
  BigInt order = 1;
  for (const auto& comp : c.components) {
    if (comp.kind != Kind::Finite) throw std::invalid_argument("group_order: infinite group");
    order *= group_order(*comp.type);
  }
  return order;
}

// ---------------------------------------------------------------- poset

SphericalPoset::SphericalPoset(std::vector<SphericalElement> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(), [](const SphericalElement& a, const SphericalElement& b) {
    int sa = a.subset.size(), sb = b.subset.size();
    return sa != sb ? sa < sb : a.subset < b.subset;
  });
  for (std::size_t i = 0; i < elements_.size(); ++i) index_[elements_[i].subset.bits()] = int(i);
}

int SphericalPoset::find(SubsetId s) const {
  auto it = index_.find(s.bits());
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> SphericalPoset::maximal() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    SubsetId s = elements_[i].subset;
    bool top = true;
    for (int g = 0; g < kMaxRank && top; ++g)
      if (!s.contains(g) && find(s.with(g)) >= 0) top = false;
    if (top) out.push_back(int(i));
  }
  return out;
}

SphericalPoset spherical_poset(const CoxeterSymbol& sym) {
  std::vector<SphericalElement> all;
  all.push_back({SubsetId(), Classification{}, 1});
  std::set<std::uint64_t> level = {0};
  const int n = sym.rank();
  while (!level.empty()) {
    std::set<std::uint64_t> next;
    for (std::uint64_t bits : level) {
      for (int g = 0; g < n; ++g) {
        SubsetId s = SubsetId(bits).with(g);
        if (s.bits() == bits || next.count(s.bits())) continue;
        // Downward closure: every facet of s must already be spherical.
        bool facets_ok = true;
        for (int h : s.indices())
          if (!level.count(s.without(h).bits())) {
            facets_ok = false;
            break;
          }
        if (!facets_ok) continue;
        Classification c = classify_subset(sym, s);
        if (!c.finite()) continue;
        next.insert(s.bits());
        BigInt order = group_order(c);
        all.push_back({s, std::move(c), order});
      }
    }
    level = std::move(next);
  }
  return SphericalPoset(std::move(all));
}

BigInt lcm_finite_orders(const SphericalPoset& poset) {
  BigInt l = 1;
  for (int i : poset.maximal()) l = lcm(l, poset.elements()[i].order);
  return l;
}

BigInt lcm_finite_orders(const CoxeterSymbol& sym) { return lcm_finite_orders(spherical_poset(sym)); }

}  // namespace hypcox
