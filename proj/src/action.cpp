#include "hypcox/action.hpp"

#include "hypcox/gram.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hypcox {

int PermutationAction::apply(const Word& w, int x) const {
  for (int g : w) x = gens[g][x];
  return x;
}

// ---------------------------------------------------------------- text

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

struct Statement {
  std::string text;
  int line;
};

std::vector<Statement> statements(std::string_view text) {
  std::vector<Statement> out;
  std::string cur;
  int line = 1, start = 1;
  bool comment = false;
  for (char c : text) {
    if (c == '\n') {
      ++line;
      comment = false;
      cur += ' ';
      continue;
    }
    if (comment) continue;
    if (c == '#') {
      comment = true;
      continue;
    }
    if (c == ';') {
      out.push_back({cur, start});
      cur.clear();
      start = line;
      continue;
    }
    if (cur.find_first_not_of(" \t\r") == std::string::npos && !std::isspace(static_cast<unsigned char>(c))) {
      cur.clear();
      start = line;
    }
    cur += c;
  }
  if (cur.find_first_not_of(" \t\r") != std::string::npos) fail(start, "missing ';'");
  return out;
}

long parse_count(const std::string& s, int line) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    fail(line, "expected a positive integer, got '" + s + "'");
  if (s.size() > 9) fail(line, "number too large: " + s);
  return std::stol(s);
}

Perm parse_cycles(const std::string& body, int n, int line) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<char> used(n, 0);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
  };
  skip();
  if (body.compare(i, std::string::npos, "id") == 0 ||
      (body.compare(i, 2, "id") == 0 && body.find_first_not_of(" \t\r", i + 2) == std::string::npos))
    return p;
  while (true) {
    skip();
    if (i == body.size()) break;
    if (body[i] != '(') fail(line, "expected '(' or 'id'");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip();
      if (i < body.size() && body[i] == ',') {
        ++i;
        continue;
      }
      if (i < body.size() && body[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) ++j;
      if (j == i) fail(line, "expected a point in cycle");
      long pt = parse_count(body.substr(i, j - i), line);
      i = j;
      if (pt < 1 || pt > n) fail(line, "point " + std::to_string(pt) + " out of range 1.." + std::to_string(n));
      if (used[pt - 1]) fail(line, "point " + std::to_string(pt) + " repeated");
      used[pt - 1] = 1;
      cycle.push_back(static_cast<int>(pt - 1));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) p[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  return p;
}

void cycles_of(std::ostringstream& out, const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  bool any = false;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x] || p[x] == static_cast<int>(x)) continue;
    out << '(';
    for (int y = static_cast<int>(x); !seen[y]; y = p[y]) {
      if (y != static_cast<int>(x)) out << ' ';
      out << y + 1;
      seen[y] = 1;
    }
    out << ')';
    any = true;
  }
  if (!any) out << "id";
}

}  // namespace

PermutationAction parse_action(std::string_view text, const CoxeterSymbol& sym) {
  auto st = statements(text);
  if (st.empty()) throw ParseError("empty action: expected 'action'");
  PermutationAction a;
  a.symbol = sym;
  {
    std::istringstream head(st[0].text);
    std::vector<std::string> w;
    for (std::string t; head >> t;) w.push_back(t);
    if (w.size() != 6 || w[0] != "action" || w[2] != "on" || w[4] != "for")
      fail(st[0].line, "expected 'action <name> on <N> for <symbol>'");
    a.name = w[1];
    a.symbol_name = w[5];
    long n = parse_count(w[3], st[0].line);
    if (n < 1 || n > kMaxDegree) fail(st[0].line, "degree out of range");
    a.gens.assign(sym.rank(), Perm());
    std::vector<char> seen(sym.rank(), 0);
    for (std::size_t s = 1; s < st.size(); ++s) {
      const auto& [body, line] = st[s];
      auto colon = body.find(':');
      if (colon == std::string::npos) fail(line, "expected '<generator>: <cycles>'");
      std::string gen = body.substr(0, colon);
      gen.erase(0, gen.find_first_not_of(" \t\r"));
      gen.erase(gen.find_last_not_of(" \t\r") + 1);
      int g = sym.index_of(gen);
      if (g < 0) fail(line, "unknown generator '" + gen + "'");
      if (seen[g]) fail(line, "generator '" + gen + "' given twice");
      seen[g] = 1;
      Perm p = parse_cycles(body.substr(colon + 1), static_cast<int>(n), line);
      for (int x = 0; x < n; ++x)
        if (p[p[x]] != x) fail(line, "generator '" + gen + "' is not an involution");
      a.gens[g] = std::move(p);
    }
    for (int g = 0; g < sym.rank(); ++g)
      if (!seen[g]) fail(st.back().line, "missing line for generator '" + sym.name(g) + "'");
  }
  return a;
}

PermutationAction load_action(const std::string& path, const CoxeterSymbol& sym) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_action(buf.str(), sym);
}

std::string emit_action(const PermutationAction& a) {
  std::ostringstream out;
  out << "action " << a.name << " on " << a.degree() << " for " << (a.symbol_name.empty() ? "G" : a.symbol_name) << ";\n";
  for (int g = 0; g < static_cast<int>(a.gens.size()); ++g) {
    out << a.symbol.name(g) << ": ";
    cycles_of(out, a.gens[g]);
    out << ";\n";
  }
  return out.str();
}

PermutationAction make_action(const CoxeterSymbol& sym, std::vector<Perm> gens, std::string name) {
  if (static_cast<int>(gens.size()) != sym.rank()) throw std::invalid_argument("one permutation per generator required");
  for (const auto& p : gens) {
    if (p.size() != gens[0].size()) throw std::invalid_argument("permutations of different degrees");
    std::vector<char> hit(p.size(), 0);
    for (int x : p) {
      if (x < 0 || x >= static_cast<int>(p.size()) || hit[x]) throw std::invalid_argument("not a permutation");
      hit[x] = 1;
    }
  }
  PermutationAction a;
  a.name = std::move(name);
  a.symbol = sym;
  a.gens = std::move(gens);
  return a;
}

PermutationAction regular_action(const CoxeterSymbol& sym, const std::vector<GroupElement>& gens, std::size_t max_elements) {
  ClassOracle group = ClassOracle::build(gens, max_elements);
  const std::size_t n = group.group_size();
  std::vector<Perm> perms(gens.size(), Perm(n));
  for (std::size_t i = 0; i < n; ++i) {
    GroupElement g = group.element(i);
    for (std::size_t s = 0; s < gens.size(); ++s) perms[s][i] = static_cast<int>(group.find(g * gens[s]));
  }
  return make_action(sym, std::move(perms), "regular");
}

// ---------------------------------------------------------------- checks

VerifyReport verify_action(const PermutationAction& a) {
  VerifyReport r;
  const int n = a.degree();
  const CoxeterSymbol& sym = a.symbol;
  for (int g = 0; g < sym.rank(); ++g)
    for (int x = 0; x < n; ++x)
      if (a.gens[g][a.gens[g][x]] != x) {
        r.violations.push_back(sym.name(g) + " is not an involution at point " + std::to_string(x + 1));
        break;
      }
  for (int s = 0; s < sym.rank(); ++s)
    for (int t = s + 1; t < sym.rank(); ++t) {
      EdgeLabel m = sym.label(s, t);
      if (m == kInfinity) continue;
      for (int x = 0; x < n; ++x) {
        int y = x;
        for (int k = 0; k < m; ++k) y = a.gens[t][a.gens[s][y]];
        if (y != x) {
          r.violations.push_back("(" + sym.name(s) + " " + sym.name(t) + ")^" + std::to_string(m) + " moves point " +
                                 std::to_string(x + 1));
          break;
        }
      }
    }
  r.ok = r.violations.empty();
  return r;
}

OrbitDecomposition orbits(const PermutationAction& a) {
  OrbitDecomposition d;
  const int n = a.degree();
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> orbit = {s};
    seen[s] = 1;
    for (std::size_t q = 0; q < orbit.size(); ++q)
      for (const auto& g : a.gens) {
        int y = g[orbit[q]];
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    d.orbits.push_back(std::move(orbit));
  }
  d.transitive = d.orbits.size() == 1;
  return d;
}

bool is_transitive(const PermutationAction& a) { return orbits(a).transitive; }

PermutationAction restrict_to(const PermutationAction& a, const std::vector<int>& orbit) {
  std::vector<int> index(a.degree(), -1);
  for (std::size_t i = 0; i < orbit.size(); ++i) index[orbit[i]] = static_cast<int>(i);
  PermutationAction r = a;
  for (std::size_t g = 0; g < a.gens.size(); ++g) {
    Perm p(orbit.size());
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      int y = index[a.gens[g][orbit[i]]];
      if (y < 0) throw std::invalid_argument("point set is not closed under the action");
      p[i] = y;
    }
    r.gens[g] = std::move(p);
  }
  return r;
}

namespace {

PermutationAction tensor_from(const PermutationAction& a1, const PermutationAction& a2, int u, int v,
                              std::vector<char>* visited) {
  const std::int64_t n2 = a2.degree();
  std::unordered_map<std::int64_t, int> index;
  std::vector<std::int64_t> pts = {u * n2 + v};
  index[pts[0]] = 0;
  const std::size_t k = a1.gens.size();
  std::vector<Perm> gens(k);
  for (std::size_t q = 0; q < pts.size(); ++q) {
    int x = static_cast<int>(pts[q] / n2), y = static_cast<int>(pts[q] % n2);
    for (std::size_t g = 0; g < k; ++g) {
      std::int64_t img = a1.gens[g][x] * n2 + a2.gens[g][y];
      auto [it, fresh] = index.try_emplace(img, static_cast<int>(pts.size()));
      if (fresh) {
        if (static_cast<long>(pts.size()) >= kMaxDegree) throw std::length_error("tensor orbit exceeds the degree cap");
        pts.push_back(img);
      }
      gens[g].push_back(it->second);
    }
  }
  if (visited)
    for (auto p : pts) (*visited)[p] = 1;
  PermutationAction t = a1;
  t.name = a1.name + "*" + a2.name;
  t.gens = std::move(gens);
  return t;
}

void check_same_symbol(const PermutationAction& a1, const PermutationAction& a2) {
  if (!(a1.symbol == a2.symbol)) throw std::invalid_argument("actions of different symbols");
}

}  // namespace

PermutationAction tensor(const PermutationAction& a1, const PermutationAction& a2, std::pair<int, int> seed) {
  check_same_symbol(a1, a2);
  if (seed.first < 0 || seed.first >= a1.degree() || seed.second < 0 || seed.second >= a2.degree())
    throw std::out_of_range("seed point out of range");
  return tensor_from(a1, a2, seed.first, seed.second, nullptr);
}

std::vector<PermutationAction> tensor_orbits(const PermutationAction& a1, const PermutationAction& a2) {
  check_same_symbol(a1, a2);
  const std::int64_t total = static_cast<std::int64_t>(a1.degree()) * a2.degree();
  if (total > kMaxDegree) throw std::length_error("product exceeds the degree cap");
  std::vector<char> visited(total, 0);
  std::vector<PermutationAction> out;
  for (std::int64_t p = 0; p < total; ++p)
    if (!visited[p]) out.push_back(tensor_from(a1, a2, static_cast<int>(p / a2.degree()), static_cast<int>(p % a2.degree()), &visited));
  return out;
}

namespace {

int fixed_point(const PermutationAction& a, const Word& w) {
  for (int x = 0; x < a.degree(); ++x)
    if (a.apply(w, x) == x) return x;
  return -1;
}

}  // namespace

bool avoids(const PermutationAction& a, const Word& w) { return fixed_point(a, w) < 0; }

TorsionReport is_torsion_free(const PermutationAction& a, const TorsionInventory& inv) {
  return is_torsion_free(a, {}, inv);
}

TorsionReport is_torsion_free(const PermutationAction& a, const std::vector<PermutationAction>& factors,
                              const TorsionInventory& inv) {
  TorsionReport r;
  for (const auto& e : inv.entries) {
    ClassVerdict v;
    v.entry = e;
    v.witness = fixed_point(a, e.word);
    v.avoided = v.witness < 0;
    for (std::size_t f = 0; f < factors.size(); ++f)
      if (avoids(factors[f], e.word)) v.avoiding_factors.push_back(static_cast<int>(f));
    r.torsion_free = r.torsion_free && v.avoided;
    r.verdicts.push_back(std::move(v));
  }
  return r;
}

OrientabilityReport is_orientable(const PermutationAction& a) {
  OrientabilityReport r;
  std::vector<int> colour(a.degree(), -1);
  for (const auto& orbit : orbits(a).orbits) {
    bool ok = true;
    colour[orbit[0]] = 0;
    std::vector<int> queue = {orbit[0]};
    for (std::size_t q = 0; q < queue.size() && ok; ++q) {
      int x = queue[q];
      for (const auto& g : a.gens) {
        int y = g[x];
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          queue.push_back(y);
        } else if (colour[y] == colour[x]) {
          ok = false;
          break;
        }
      }
    }
    r.per_orbit.push_back(ok);
    r.orientable = r.orientable && ok;
  }
  return r;
}

namespace {

int root_of(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

std::vector<BlockSystem> block_systems(const PermutationAction& a) {
  if (!is_transitive(a)) throw std::invalid_argument("block systems need a transitive action");
  const int n = a.degree();
  std::set<std::vector<int>> seen;
  std::vector<BlockSystem> out;
  for (int x = 1; x < n; ++x) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<std::pair<int, int>> queue = {{0, x}};
    parent[x] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const auto& g : a.gens) {
        int u = root_of(parent, g[queue[q].first]), v = root_of(parent, g[queue[q].second]);
        if (u == v) continue;
        parent[std::max(u, v)] = std::min(u, v);
        queue.emplace_back(u, v);
      }
    std::vector<int> label(n, -1), block_of(n);
    int blocks = 0;
    for (int y = 0; y < n; ++y) {
      int r = root_of(parent, y);
      if (label[r] < 0) label[r] = blocks++;
      block_of[y] = label[r];
    }
    if (blocks == 1 || !seen.insert(block_of).second) continue;
    BlockSystem b;
    b.block_of = block_of;
    b.blocks.assign(blocks, {});
    for (int y = 0; y < n; ++y) b.blocks[block_of[y]].push_back(y);
    b.block_size = static_cast<int>(b.blocks[0].size());
    std::vector<Perm> induced(a.gens.size(), Perm(blocks));
    for (std::size_t g = 0; g < a.gens.size(); ++g)
      for (int k = 0; k < blocks; ++k) induced[g][k] = block_of[a.gens[g][b.blocks[k][0]]];
    b.induced = a;
    b.induced.name = a.name + "/blocks";
    b.induced.gens = std::move(induced);
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), [](const BlockSystem& x, const BlockSystem& y) {
    return std::tie(x.block_size, x.block_of) < std::tie(y.block_size, y.block_of);
  });
  return out;
}

DivisibilityReport check_divisibility(const PermutationAction& a1, const PermutationAction& a2, const std::vector<Word>& f) {
  check_same_symbol(a1, a2);
  DivisibilityReport r;
  r.omega1 = a1.degree();
  r.omega2 = a2.degree();
  if (!is_transitive(a1)) r.failures.push_back("first module is not transitive");
  if (!is_transitive(a2)) r.failures.push_back("second module is not transitive");
  for (int u = 0; u < a1.degree() && r.fixed_point < 0; ++u)
    if (std::all_of(f.begin(), f.end(), [&](const Word& w) { return a1.apply(w, u) == u; })) r.fixed_point = u;
  if (r.fixed_point < 0) r.failures.push_back("F fixes no point of the first module");

  // <F> on the second module
  const int n2 = a2.degree();
  Perm id(n2);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> gens;
  for (const auto& w : f) {
    Perm p(n2);
    for (int y = 0; y < n2; ++y) p[y] = a2.apply(w, y);
    gens.push_back(std::move(p));
  }
  std::set<Perm> group = {id};
  std::vector<Perm> list = {id};
  for (std::size_t q = 0; q < list.size(); ++q)
    for (const auto& g : gens) {
      Perm h(n2);
      for (int y = 0; y < n2; ++y) h[y] = g[list[q][y]];
      if (!group.insert(h).second) continue;
      if (list.size() >= 100000) throw std::length_error("<F> is too large");
      list.push_back(std::move(h));
    }
  r.subgroup_order = static_cast<long>(list.size());
  for (const auto& p : list) {
    if (p == id) continue;
    for (int y = 0; y < n2; ++y)
      if (p[y] == y) {
        r.failures.push_back("<F> has a nonidentity element fixing point " + std::to_string(y + 1) + " of the second module");
        break;
      }
    if (!r.failures.empty() && r.failures.back().find("<F>") == 0) break;
  }
  r.preconditions = r.failures.empty();
  long f_order = r.preconditions ? r.subgroup_order : 1;
  r.divisor = std::lcm(r.omega1 * f_order, r.omega2);
  r.holds = true;
  for (const auto& t : tensor_orbits(a1, a2)) {
    r.orbit_sizes.push_back(t.degree());
    r.holds = r.holds && t.degree() % r.divisor == 0;
  }
  return r;
}

// ---------------------------------------------------------------- certificate

std::string ManifoldCertificate::str() const {
  std::ostringstream out;
  out << "valid=" << (valid ? "VALID" : "INVALID") << "\n";
  out << "dimension=" << dimension << "\n";
  out << "index=" << index << "\n";
  out << "chi_gamma=" << to_string(chi_gamma) << "\n";
  out << "chi=" << (chi ? to_string(*chi) : "unknown") << "\n";
  out << "volume=" << (volume ? volume->str() : "unknown") << "\n";
  if (volume) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", volume->approx);
    out << "volume_approx=" << buf << "\n";
  }
  out << "orientable=" << (orientable ? "true" : "false") << "\n";
  for (const auto& c : checks) {
    out << "check." << c.name << "=" << (c.pass ? "pass" : "fail");
    if (!c.witness.empty()) out << ":" << c.witness;
    out << "\n";
  }
  return out.str();
}

namespace {

// Whole-permutation composition, right to left.
Perm word_permutation(const PermutationAction& a, const Word& w) {
  Perm p(a.degree());
  std::iota(p.begin(), p.end(), 0);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const Perm& g = a.gens[*it];
    Perm q(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) q[x] = p[g[x]];
    p.swap(q);
  }
  return p;
}

}  // namespace

ManifoldCertificate certify(const CoxeterSymbol& sym, const PermutationAction& a, std::optional<int> dim,
                            const std::optional<SymbolicVolume>& simplex_volume) {
  if (!(a.symbol == sym)) throw std::invalid_argument("action is not over this symbol");
  ManifoldCertificate c;
  c.dimension = dim.value_or(sym.rank() - 1);
  c.index = a.degree();
  auto add = [&](std::string name, bool pass, std::string witness = "") {
    c.checks.push_back({std::move(name), pass, std::move(witness)});
    return pass;
  };

  bool ok = add("hyperbolic", is_hyperbolic(sym, {}, c.dimension));
  SimplexReport simplex = is_cofinite_simplex(sym, c.dimension);
  ok &= add("simplex", simplex.supported && simplex.cofinite, simplex.reason);
  VerifyReport v = verify_action(a);
  ok &= add("relators", v.ok, v.ok ? "" : v.violations[0]);
  OrbitDecomposition orb = orbits(a);
  ok &= add("transitive", orb.transitive, orb.transitive ? "" : std::to_string(orb.orbits.size()) + " orbits");

  TorsionInventory inv = inventory(sym);
  TorsionReport torsion = is_torsion_free(a, inv);
  std::string twit;
  for (const auto& verdict : torsion.verdicts)
    if (!verdict.avoided) {
      twit = "word=" + word_string(verdict.entry.word, sym.generators()) + " point=" + std::to_string(verdict.witness + 1);
      break;
    }
  ok &= add("torsion_free", torsion.torsion_free, twit);
  if (torsion.torsion_free) {
    bool sound = true;
    std::string swit;
    for (const auto& e : inv.entries) {
      Perm p = word_permutation(a, e.word);
      for (int x = 0; x < a.degree() && sound; ++x)
        if (p[x] == x) {
          sound = false;
          swit = "word=" + word_string(e.word, sym.generators()) + " point=" + std::to_string(x + 1);
        }
      if (!sound) break;
    }
    ok &= add("soundness", sound, swit);
  }

  OrientabilityReport orient = is_orientable(a);
  c.orientable = orient.orientable;
  add("orientable", orient.orientable);

  c.chi_gamma = euler_characteristic(sym);
  c.chi = c.chi_gamma * c.index;
  c.chi->canonicalize();
  if (c.dimension >= 2 && (c.dimension % 2 == 0 || (simplex_volume && *c.chi == 0)))
    c.volume = manifold_invariants(c.chi_gamma, c.index, c.dimension, simplex_volume).volume;
  c.valid = ok;
  return c;
}

}  // namespace hypcox
