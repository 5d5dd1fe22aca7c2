// Gram matrices of Coxeter symbols, their inertia, and the simplex
// cofiniteness test.
#ifndef HYPCOX_GRAM_HPP
#define HYPCOX_GRAM_HPP

#include "hypcox/exact.hpp"
#include "hypcox/symbol.hpp"

#include <Eigen/Core>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hypcox {

/// Values c <= -1 for infinity edges, keyed by (a, b) with a < b.
using InfinityWeights = std::map<std::pair<int, int>, Rational>;

using ExactMatrix = Eigen::Matrix<QSqrt23, Eigen::Dynamic, Eigen::Dynamic>;

struct GramMatrix {
  Eigen::MatrixXd numeric;
  /// Present when every label is in {2,3,4,6,inf}.
  std::optional<ExactMatrix> exact;

  int size() const { return static_cast<int>(numeric.rows()); }
  /// Entry (i, j) as text: exact when available, else 17 significant digits.
  std::string entry_string(int i, int j) const;
};

struct Signature {
  int negatives = 0;
  int positives = 0;
  int zeros = 0;
  double tol = 0.0;

  bool operator==(const Signature& o) const {
    return negatives == o.negatives && positives == o.positives && zeros == o.zeros;
  }
  bool operator!=(const Signature& o) const { return !(*this == o); }
};

inline constexpr double kDefaultTolerance = 1e-9;

/// -cos(pi/m) off the diagonal; infinity edges take c from `weights`, default -1.
/// Throws std::invalid_argument when some c > -1.
GramMatrix gram_matrix(const CoxeterSymbol& sym, const InfinityWeights& weights = {});

/// Inertia from the eigenvalues of the numeric matrix.
Signature signature(const GramMatrix& g, double tol = kDefaultTolerance);

/// Inertia by exact symmetric LDL pivoting; empty without an exact matrix.
std::optional<Signature> exact_signature(const GramMatrix& g);

/// Signature (1, n, 0).
bool is_hyperbolic(const CoxeterSymbol& sym, const InfinityWeights& weights, int n);

/// eta with -cosh(eta) = c.
double eta_from_c(const Rational& c);

struct SimplexReport {
  bool supported = true;
  bool cofinite = false;
  int dimension = 0;
  /// Affine subsets of size n (cusps).
  std::vector<SubsetId> ideal_vertices;
  std::string reason;
};

/// Treats a symbol on n+1 nodes as an n-simplex. `dim`, when given, must be
/// rank-1; otherwise the report is unsupported.
SimplexReport is_cofinite_simplex(const CoxeterSymbol& sym, std::optional<int> dim = std::nullopt);

namespace detail {

inline int sign_of(const QSqrt23& x) { return x.sign(); }
inline int sign_of(const Rational& x) { return sgn(x); }

/// Counts pivot signs of an exact symmetric matrix. Uses a 2x2 pivot
/// [[0,a],[a,0]] when the remaining diagonal vanishes.
template <typename Scalar>
Signature ldl_inertia(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a) {
  Signature s;
  const Eigen::Index n = a.rows();
  Eigen::Index k = 0;
  auto swap_sym = [&](Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    a.col(i).swap(a.col(j));
  };
  while (k < n) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = k; i < n; ++i)
      if (sign_of(a(i, i)) != 0) {
        piv = i;
        break;
      }
    if (piv >= 0) {
      swap_sym(k, piv);
      const Scalar d = a(k, k);
      (sign_of(d) > 0 ? s.positives : s.negatives)++;
      for (Eigen::Index r = k + 1; r < n; ++r) {
        if (sign_of(a(r, k)) == 0) continue;
        const Scalar f = a(r, k) / d;
        for (Eigen::Index c = k + 1; c < n; ++c) a(r, c) -= f * a(k, c);
      }
      ++k;
      continue;
    }
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = k; i < n && pi < 0; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j)
        if (sign_of(a(i, j)) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) {
      s.zeros += static_cast<int>(n - k);
      break;
    }
    swap_sym(k, pi);
    swap_sym(k + 1, pj);
    const Scalar off = a(k, k + 1);
    s.positives++;
    s.negatives++;
    for (Eigen::Index r = k + 2; r < n; ++r)
      for (Eigen::Index c = k + 2; c < n; ++c) {
        Scalar t = a(r, k) * a(k + 1, c) + a(r, k + 1) * a(k, c);
        if (sign_of(t) != 0) a(r, c) -= t / off;
      }
    k += 2;
  }
  return s;
}

}  // namespace detail

}  // namespace hypcox

#endif  // HYPCOX_GRAM_HPP
