// hypcox: command-line front end. Machine output is key=value on stdout.
#include "hypcox/action.hpp"
#include "hypcox/euler.hpp"
#include "hypcox/gram.hpp"
#include "hypcox/roots.hpp"
#include "hypcox/search.hpp"
#include "hypcox/symbol.hpp"
#include "hypcox/torsion.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace hypcox;

namespace {

struct Failed {
  int code;
};

std::string yes(bool b) { return b ? "true" : "false"; }

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string order_text(const Classification& c) {
  return c.finite() ? to_string(group_order(c)) : "inf";
}

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  std::istringstream in(text);
  Word w;
  for (std::string tok; in >> tok;) {
    auto it = std::find(names.begin(), names.end(), tok);
    if (it == names.end()) throw ParseError("unknown generator in word: " + tok);
    w.push_back(static_cast<int>(it - names.begin()));
  }
  return w;
}

InfinityWeights parse_weights(const CoxeterSymbol& sym, const std::vector<std::string>& specs) {
  InfinityWeights w;
  for (const auto& s : specs) {
    auto eq = s.find('='), comma = s.find(',');
    if (eq == std::string::npos || comma == std::string::npos || comma > eq)
      throw ParseError("weight must look like a,b=c: " + s);
    int a = sym.index_of(s.substr(0, comma)), b = sym.index_of(s.substr(comma + 1, eq - comma - 1));
    if (a < 0 || b < 0) throw ParseError("unknown generator in weight: " + s);
    w[{std::min(a, b), std::max(a, b)}] = parse_rational(s.substr(eq + 1));
  }
  return w;
}

int cmd_classify(const std::string& file, bool poset, bool infinity_affine) {
  CoxeterSymbol sym = load_symbol(file);
  ClassifyOptions opts;
  opts.infinity_is_affine = infinity_affine;
  Classification c = classify(sym, opts);
  std::cout << "type=" << c.name() << " order=" << order_text(c) << "\n";
  if (poset) {
    SphericalPoset p = spherical_poset(sym);
    std::vector<int> maximal = p.maximal();
    for (int i = 0; i < static_cast<int>(p.size()); ++i) {
      const auto& el = p.elements()[i];
      bool top = std::find(maximal.begin(), maximal.end(), i) != maximal.end();
      std::cout << "subset=" << (el.subset.empty() ? "-" : subset_names(sym, el.subset)) << " type=" << el.classification.name()
                << " order=" << to_string(el.order) << " maximal=" << yes(top) << "\n";
    }
  }
  return 0;
}

int cmd_gram(const std::string& file, const std::vector<std::string>& weights, std::optional<int> dim, double tol) {
  CoxeterSymbol sym = load_symbol(file);
  GramMatrix g = gram_matrix(sym, parse_weights(sym, weights));
  for (int i = 0; i < g.size(); ++i) {
    std::cout << "row." << sym.name(i) << "=";
    for (int j = 0; j < g.size(); ++j) std::cout << (j ? " " : "") << g.entry_string(i, j);
    std::cout << "\n";
  }
  Signature s = signature(g, tol);
  std::cout << "signature=" << s.negatives << "," << s.positives << "," << s.zeros << "\n";
  if (auto e = exact_signature(g)) {
    std::cout << "exact_signature=" << e->negatives << "," << e->positives << "," << e->zeros << "\n";
    if (*e != s) std::cerr << "warning: numeric and exact signatures differ\n";
  }
  int n = dim.value_or(sym.rank() - 1);
  std::cout << "hyperbolic=" << yes(is_hyperbolic(sym, parse_weights(sym, weights), n)) << "\n";
  SimplexReport r = is_cofinite_simplex(sym, dim);
  std::cout << "simplex_supported=" << yes(r.supported) << "\n";
  std::cout << "cofinite=" << yes(r.supported && r.cofinite) << "\n";
  std::cout << "ideal_vertices=" << r.ideal_vertices.size() << "\n";
  if (!r.reason.empty()) std::cerr << r.reason << "\n";
  return 0;
}

int cmd_euler(const std::string& file, std::optional<long> index, std::optional<int> dim,
              const std::vector<std::string>& volume) {
  CoxeterSymbol sym = load_symbol(file);
  SphericalPoset poset = spherical_poset(sym);
  Rational chi = euler_characteristic(poset);
  std::cout << "chi=" << to_string(chi) << " lcm=" << to_string(lcm_finite_orders(poset)) << " serre=" << to_string(serre_sum(sym))
            << "\n";
  if (index) {
    int n = dim.value_or(sym.rank() - 1);
    std::optional<SymbolicVolume> simplex;
    if (volume.size() == 1) simplex = load_volume(volume[0]);
    if (volume.size() == 2) simplex = parse_volume(volume[0] + " " + volume[1]);
    ManifoldInvariants m = manifold_invariants(chi, *index, n, simplex);
    std::cout << "index=" << *index << " dim=" << n << "\n";
    std::cout << "chi_m=" << to_string(m.chi) << "\n";
    std::cout << "volume=" << m.volume.str() << "\n";
    std::cout << "volume_approx=" << fmt(m.volume.approx) << "\n";
  }
  return 0;
}

int cmd_torsion(const std::string& file) {
  CoxeterSymbol sym = load_symbol(file);
  for (const auto& e : inventory(sym).entries)
    std::cout << "order=" << e.order << " subset=" << subset_names(sym, e.subset) << " word=" << word_string(e.word, sym.generators())
              << "\n";
  return 0;
}

int cmd_roots(const std::string& type_name, bool list, const std::string& word, bool classes) {
  IsoType t = IsoType::parse(type_name);
  if (t.family == Family::I) throw ParseError("I2(m) has no exact root system here; use G2, H3, H4 or a Weyl type");
  RootSystem rs = root_system(t);
  std::cout << "type=" << t.name() << " roots=" << rs.size() << " positive=" << rs.size() / 2 << " dimension=" << rs.dimension()
            << "\n";
  if (list)
    for (int r = 0; r < rs.size() / 2; ++r) std::cout << "root." << r + 1 << "=" << to_string(rs.root(r)) << "\n";
  std::vector<std::string> names = canonical_symbol(t).generators();
  if (!word.empty()) {
    GroupElement g = word_to_element(rs, parse_word(word, names));
    std::cout << "order=" << element_order(g) << " fixed_roots=" << fixed_roots(g) << "\n";
  }
  if (classes)
    for (const auto& r : class_representatives(t))
      std::cout << "order=" << r.order << " fixed_roots=" << r.fixed_root_count << " source=" << r.source
                << " word=" << word_string(r.word, names) << "\n";
  return 0;
}

int cmd_verify(const std::string& sym_file, const std::string& act_file) {
  CoxeterSymbol sym = load_symbol(sym_file);
  PermutationAction a = load_action(act_file, sym);
  VerifyReport v = verify_action(a);
  OrbitDecomposition o = orbits(a);
  OrientabilityReport orient = is_orientable(a);
  TorsionReport t = is_torsion_free(a, inventory(sym));
  std::cout << "degree=" << a.degree() << "\n";
  std::cout << "relators=" << (v.ok ? "pass" : "fail:" + v.violations[0]) << "\n";
  std::cout << "orbits=" << o.orbits.size() << "\n";
  std::cout << "transitive=" << yes(o.transitive) << "\n";
  std::cout << "orientable=" << yes(orient.orientable) << "\n";
  std::cout << "torsion_free=" << yes(t.torsion_free) << "\n";
  for (const auto& verdict : t.verdicts)
    if (!verdict.avoided)
      std::cout << "fixed order=" << verdict.entry.order << " word=" << word_string(verdict.entry.word, sym.generators())
                << " point=" << verdict.witness + 1 << "\n";
  return v.ok ? 0 : 1;
}

int cmd_certify(const std::string& sym_file, const std::string& act_file, std::optional<int> dim,
                const std::vector<std::string>& volume) {
  CoxeterSymbol sym = load_symbol(sym_file);
  PermutationAction a = load_action(act_file, sym);
  std::optional<SymbolicVolume> simplex;
  if (volume.size() == 1) simplex = load_volume(volume[0]);
  if (volume.size() == 2) simplex = parse_volume(volume[0] + " " + volume[1]);
  ManifoldCertificate c = certify(sym, a, dim, simplex);
  std::cout << c.str();
  return c.valid ? 0 : 1;
}

int cmd_search(const std::string& file, const SearchConfig& cfg, const std::string& out_dir) {
  CoxeterSymbol sym = load_symbol(file);
  SearchResult r = search_torsion_free(sym, cfg);
  std::cout << "solutions=" << r.solutions.size() << "\n";
  std::cout << "exhausted=" << yes(r.exhausted) << "\n";
  std::cout << "degree_gate=" << yes(r.degree_gate) << "\n";
  std::cout << "budget_hit=" << yes(r.budget_hit) << "\n";
  std::cout << "nodes=" << r.nodes << "\n";
  std::string stem = std::filesystem::path(file).stem().string();
  for (std::size_t i = 0; i < r.solutions.size(); ++i) {
    PermutationAction a = r.solutions[i];
    a.symbol_name = stem;
    auto path = std::filesystem::path(out_dir) / (stem + "_" + std::to_string(cfg.degree) + "_" + std::to_string(i + 1) + ".act");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << emit_action(a);
    std::cout << "solution." << i + 1 << "=" << path.string() << "\n";
  }
  return r.solutions.empty() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperbolic Coxeter groups: symbols, torsion, Euler characteristics and manifold certificates"};
  app.require_subcommand(1);

  std::string sym_file, act_file, type_name, word, out_dir = ".";
  std::vector<std::string> weights, volume;
  std::optional<int> dim;
  std::optional<long> index;
  bool poset = false, list = false, classes = false, infinity_affine = false;
  double tol = kDefaultTolerance;
  SearchConfig cfg;

  auto* classify_cmd = app.add_subcommand("classify", "Isomorphism type and group order");
  classify_cmd->add_option("symbol", sym_file, "Symbol file")->required();
  classify_cmd->add_flag("--poset", poset, "List the spherical subsets");
  classify_cmd->add_flag("--infinity-affine", infinity_affine, "Report a lone infinity edge as ~A1");

  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix, signature and simplex test");
  gram_cmd->add_option("symbol", sym_file, "Symbol file")->required();
  gram_cmd->add_option("--weight", weights, "Infinity edge weight a,b=c (c <= -1)");
  gram_cmd->add_option("--dim", dim, "Dimension n");
  gram_cmd->add_option("--tol", tol, "Eigenvalue tolerance");

  auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic and manifold invariants");
  euler_cmd->add_option("symbol", sym_file, "Symbol file")->required();
  euler_cmd->add_option("--index", index, "Index of the torsion-free subgroup");
  euler_cmd->add_option("--dim", dim, "Dimension n");
  euler_cmd->add_option("--simplex-volume", volume, "Simplex volume: <coeff> <const>, or a volume file")->expected(1, 2);

  auto* torsion_cmd = app.add_subcommand("torsion", "Prime-order torsion representatives");
  torsion_cmd->add_option("symbol", sym_file, "Symbol file")->required();

  auto* roots_cmd = app.add_subcommand("roots", "Root system of a finite type");
  roots_cmd->add_option("type", type_name, "Type such as E6 or H4")->required();
  roots_cmd->add_flag("--list", list, "Print the positive roots");
  roots_cmd->add_option("--word", word, "Word in x1..xn: print its order and fixed roots");
  roots_cmd->add_flag("--classes", classes, "Print the prime-order class representatives");

  auto* verify_cmd = app.add_subcommand("verify", "Check a permutation action");
  verify_cmd->add_option("symbol", sym_file, "Symbol file")->required();
  verify_cmd->add_option("action", act_file, "Action file")->required();

  auto* certify_cmd = app.add_subcommand("certify", "Manifold certificate for an action");
  certify_cmd->add_option("symbol", sym_file, "Symbol file")->required();
  certify_cmd->add_option("action", act_file, "Action file")->required();
  certify_cmd->add_option("--dim", dim, "Dimension n (default rank - 1)");
  certify_cmd->add_option("--simplex-volume", volume, "Simplex volume: <coeff> <const>, or a volume file")->expected(1, 2);

  auto* search_cmd = app.add_subcommand("search", "Search for torsion-free transitive actions");
  search_cmd->add_option("symbol", sym_file, "Symbol file")->required();
  search_cmd->add_option("--degree", cfg.degree, "Number of points")->required();
  search_cmd->add_flag("--orientable", cfg.require_orientable, "Only orientable actions");
  search_cmd->add_option("--budget-nodes", cfg.max_nodes, "Node budget");
  search_cmd->add_option("--budget-seconds", cfg.max_seconds, "Time budget");
  search_cmd->add_option("--max-solutions", cfg.max_solutions, "Stop after this many");
  search_cmd->add_option("--seed", cfg.seed, "Branch order seed (0 = natural order)");
  search_cmd->add_option("--out", out_dir, "Directory for solution files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*classify_cmd) return cmd_classify(sym_file, poset, infinity_affine);
    if (*gram_cmd) return cmd_gram(sym_file, weights, dim, tol);
    if (*euler_cmd) return cmd_euler(sym_file, index, dim, volume);
    if (*torsion_cmd) return cmd_torsion(sym_file);
    if (*roots_cmd) return cmd_roots(type_name, list, word, classes);
    if (*verify_cmd) return cmd_verify(sym_file, act_file);
    if (*certify_cmd) return cmd_certify(sym_file, act_file, dim, volume);
    if (*search_cmd) return cmd_search(sym_file, cfg, out_dir);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
