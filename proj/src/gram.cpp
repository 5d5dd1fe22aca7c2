#include "hypcox/gram.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace hypcox {

namespace {

std::optional<QSqrt23> exact_cosine_entry(EdgeLabel m) {
  switch (m) {
    case 1: return QSqrt23(1);
    case 2: return QSqrt23(0);
    case 3: return QSqrt23(make_rational(-1, 2));
    case 4: return QSqrt23(0, make_rational(-1, 2));
    case 6: return QSqrt23(0, 0, make_rational(-1, 2));
    default: return std::nullopt;
  }
}

}  // namespace

std::string GramMatrix::entry_string(int i, int j) const {
  if (exact) return (*exact)(i, j).str();
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", numeric(i, j));
  return buf;
}

GramMatrix gram_matrix(const CoxeterSymbol& sym, const InfinityWeights& weights) {
  const int n = sym.rank();
  for (const auto& [key, c] : weights) {
    if (c > -1) throw std::invalid_argument("infinity weight must be <= -1");
    if (key.first < 0 || key.second >= n || key.first >= key.second ||
        sym.label(key.first, key.second) != kInfinity)
      throw std::invalid_argument("weight given for a pair that is not an infinity edge");
  }
  GramMatrix g;
  g.numeric.resize(n, n);
  ExactMatrix exact(n, n);
  bool have_exact = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      EdgeLabel m = sym.label(i, j);
      if (m == kInfinity) {
        auto it = weights.find({std::min(i, j), std::max(i, j)});
        Rational c = it == weights.end() ? Rational(-1) : it->second;
        g.numeric(i, j) = c.get_d();
        exact(i, j) = QSqrt23(c);
      } else {
        g.numeric(i, j) = m == 1 ? 1.0 : -std::cos(std::numbers::pi / m);
        if (m == 2) g.numeric(i, j) = 0.0;
        if (auto e = exact_cosine_entry(m)) {
          exact(i, j) = *e;
        } else {
          have_exact = false;
        }
      }
    }
  if (have_exact) g.exact = std::move(exact);
  return g;
}

Signature signature(const GramMatrix& g, double tol) {
  Signature s;
  s.tol = tol;
  if (g.size() == 0) return s;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.numeric, Eigen::EigenvaluesOnly);
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    double ev = es.eigenvalues()(i);
    if (ev < -tol) {
      ++s.negatives;
    } else if (ev > tol) {
      ++s.positives;
    } else {
      ++s.zeros;
    }
  }
  return s;
}

std::optional<Signature> exact_signature(const GramMatrix& g) {
  if (!g.exact) return std::nullopt;
  return detail::ldl_inertia<QSqrt23>(*g.exact);
}

bool is_hyperbolic(const CoxeterSymbol& sym, const InfinityWeights& weights, int n) {
  Signature s = signature(gram_matrix(sym, weights));
  return s.negatives == 1 && s.positives == n && s.zeros == 0;
}

double eta_from_c(const Rational& c) {
  if (c > -1) throw std::invalid_argument("c must be <= -1");
  return std::acosh(-c.get_d());
}

SimplexReport is_cofinite_simplex(const CoxeterSymbol& sym, std::optional<int> dim) {
  SimplexReport r;
  const int k = sym.rank();
  r.dimension = k - 1;
  if (k < 2 || (dim && *dim != k - 1)) {
    r.supported = false;
    r.reason = "not a simplex symbol";
    return r;
  }
  const int n = k - 1;
  const std::uint64_t full = SubsetId::full(k).bits();
  Classification whole = classify(sym);
  if (whole.finite() || whole.affine()) {
    r.reason = "symbol is " + std::string(whole.finite() ? "finite" : "affine");
    return r;
  }
  for (std::uint64_t b = 0; b < full; ++b) {
    SubsetId s(b);
    Classification c = classify_subset(sym, s);
    if (c.finite()) continue;
    if (s.size() == n && c.affine()) {
      r.ideal_vertices.push_back(s);
      continue;
    }
    r.reason = "face {" + subset_names(sym, s) + "} is " + c.name();
    r.ideal_vertices.clear();
    return r;
  }
  std::sort(r.ideal_vertices.begin(), r.ideal_vertices.end());
  r.cofinite = true;
  return r;
}

}  // namespace hypcox
