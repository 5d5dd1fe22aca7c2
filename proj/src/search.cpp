#include "hypcox/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>

namespace hypcox {

namespace {

class Searcher {
 public:
  Searcher(const CoxeterSymbol& sym, const SearchConfig& cfg, const TorsionInventory& inv)
      : sym_(sym), cfg_(cfg), n_(cfg.degree), k_(sym.rank()), rng_(cfg.seed) {
    img_.assign(k_, std::vector<int>(n_, -1));
    colour_.assign(n_, -1);
    no_fixed_.assign(k_, false);
    for (const auto& e : inv.entries) {
      words_.push_back(e.word);
      if (e.word.size() == 1) no_fixed_[e.word[0]] = true;
    }
    for (int a = 0; a < k_; ++a)
      for (int b = a + 1; b < k_; ++b) {
        EdgeLabel m = sym.label(a, b);
        if (m == kInfinity) continue;
        relators_.push_back(power({a, b}, m));
      }
    start_ = std::chrono::steady_clock::now();
  }

  SearchResult run() {
    count_ = 1;
    colour_[0] = 0;
    bool ok = propagate();
    if (ok) dfs();
    result_.exhausted = !result_.budget_hit && static_cast<int>(result_.solutions.size()) < cfg_.max_solutions;
    return result_;
  }

 private:
  bool assign(int g, int x, int y) {
    if (img_[g][x] >= 0) return img_[g][x] == y;
    if (img_[g][y] >= 0) return false;
    if (x == y && (no_fixed_[g] || cfg_.require_orientable)) return false;
    if (cfg_.require_orientable && colour_[x] >= 0 && colour_[y] >= 0 && colour_[x] == colour_[y]) return false;
    img_[g][x] = y;
    trail_.emplace_back(g, x);
    if (x != y) {
      img_[g][y] = x;
      trail_.emplace_back(g, y);
    }
    return true;
  }

  void undo(std::size_t mark, int count) {
    while (trail_.size() > mark) {
      auto [g, x] = trail_.back();
      img_[g][x] = -1;
      trail_.pop_back();
    }
    for (int p = count; p < count_; ++p) colour_[p] = -1;
    count_ = count;
  }

  // Relator deductions to a fixed point, then fixed-point pruning.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : relators_) {
        const int len = static_cast<int>(r.size());
        for (int x = 0; x < count_; ++x) {
          int f = x, i = 0;
          while (i < len && img_[r[i]][f] >= 0) f = img_[r[i]][f], ++i;
          if (i == len) {
            if (f != x) return false;
            continue;
          }
          int b = x, j = len;
          while (j > i && img_[r[j - 1]][b] >= 0) b = img_[r[j - 1]][b], --j;
          if (j == i + 1) {
            if (!assign(r[i], f, b)) return false;
            changed = true;
          }
        }
      }
    }
    for (const auto& w : words_)
      for (int x = 0; x < count_; ++x) {
        int y = x;
        std::size_t i = 0;
        while (i < w.size() && img_[w[i]][y] >= 0) y = img_[w[i]][y], ++i;
        if (i == w.size() && y == x) return false;
      }
    return true;
  }

  bool out_of_budget() {
    if (result_.nodes >= cfg_.max_nodes) return true;
    if ((result_.nodes & 1023) == 0) {
      std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
      if (dt.count() > cfg_.max_seconds) return true;
    }
    return false;
  }

  // Returns false to stop the whole search.
  bool dfs() {
    if (static_cast<int>(result_.solutions.size()) >= cfg_.max_solutions) return false;
    ++result_.nodes;
    if (out_of_budget()) {
      result_.budget_hit = true;
      return false;
    }
    int gx = -1, gg = -1;
    for (int x = 0; x < count_ && gx < 0; ++x)
      for (int g = 0; g < k_; ++g)
        if (img_[g][x] < 0) {
          gx = x;
          gg = g;
          break;
        }
    if (gx < 0) {
      if (count_ == n_) record();
      return true;
    }
    std::vector<int> choices;
    for (int y = 0; y < count_; ++y)
      if (img_[gg][y] < 0) choices.push_back(y);
    if (cfg_.seed) std::shuffle(choices.begin(), choices.end(), rng_);
    if (count_ < n_) choices.push_back(count_);
    for (int y : choices) {
      std::size_t mark = trail_.size();
      int count = count_;
      if (y == count_) {
        colour_[y] = 1 - colour_[gx];
        ++count_;
      }
      if (assign(gg, gx, y) && propagate())
        if (!dfs()) {
          undo(mark, count);
          return false;
        }
      undo(mark, count);
    }
    return true;
  }

  void record() {
    std::vector<Perm> gens(k_, Perm(n_));
    for (int g = 0; g < k_; ++g)
      for (int x = 0; x < n_; ++x) gens[g][x] = img_[g][x];
    PermutationAction a = make_action(sym_, std::move(gens), "found" + std::to_string(result_.solutions.size() + 1));
    result_.solutions.push_back(std::move(a));
  }

  const CoxeterSymbol& sym_;
  const SearchConfig& cfg_;
  int n_, k_;
  int count_ = 0;
  std::vector<std::vector<int>> img_;
  std::vector<int> colour_;
  std::vector<bool> no_fixed_;
  std::vector<Word> relators_;
  std::vector<Word> words_;
  std::vector<std::pair<int, int>> trail_;
  std::mt19937_64 rng_;
  std::chrono::steady_clock::time_point start_;
  SearchResult result_;
};

}  // namespace

SearchResult search_torsion_free(const CoxeterSymbol& sym, const SearchConfig& cfg) {
  if (cfg.degree < 1 || cfg.degree > kMaxDegree) throw std::invalid_argument("degree out of range");
  if (cfg.max_nodes < 1 || cfg.max_seconds <= 0 || cfg.max_solutions < 1) throw std::invalid_argument("budgets must be positive");
  if (sym.rank() == 0) throw std::invalid_argument("empty symbol");
  SearchResult gate;
  BigInt l = lcm_finite_orders(sym);
  if (BigInt(cfg.degree) % l != 0) {
    gate.exhausted = true;
    gate.degree_gate = true;
    return gate;
  }
  TorsionInventory inv = cfg.inventory ? *cfg.inventory : inventory(sym);
  Searcher s(sym, cfg, inv);
  return s.run();
}

}  // namespace hypcox
