#pragma once

// Wedge-by-a-vector matrices and graded complexes built from them.

#include <cstdint>
#include <span>
#include <vector>

#include "cfloer/errors.hpp"
#include "cfloer/exterior/index_set.hpp"
#include "cfloer/exterior/matrix.hpp"
#include "cfloer/scalars/field.hpp"

namespace cfloer {

/// Matrix of x -> (sum_j v_j L_j) ^ x from degree k to degree k+1, in the
/// lexicographic bases. For k = n the target is zero-dimensional.
template <FieldScalar S>
Matrix<S> wedge_by_vector(int n, std::span<const S> v, int k) {
  if (static_cast<int>(v.size()) != n) throw RankMismatch("vector length does not match rank");
  if (k < 0 || k > n) throw IndexError("degree " + std::to_string(k) + " outside 0.." + std::to_string(n));
  BasisIndex src(n, k), dst(n, k + 1);
  Matrix<S> m(dst.size(), src.size());
  for (std::size_t col = 0; col < src.size(); ++col) {
    for (int j = 1; j <= n; ++j) {
      auto [sign, t] = insert_sign(j, src.sets()[col], n);
      if (sign == 0) continue;
      const auto row = static_cast<std::size_t>(dst.position(t));
      m(row, col) = m(row, col) + (sign > 0 ? v[j - 1] : -v[j - 1]);
    }
  }
  return m;
}

/// Per-degree maps D_k : Lambda^k -> Lambda^{k+1}, k = 0..n.
template <FieldScalar S>
struct GradedMatrixComplex {
  int n = 0;
  std::vector<Matrix<S>> differentials;

  /// True when every composite D_{k+1} D_k vanishes within tol.
  bool is_complex(double tol = 0.0) const {
    for (std::size_t k = 0; k + 1 < differentials.size(); ++k) {
      const auto composite = differentials[k + 1] * differentials[k];
      if (!composite.is_zero_matrix(tol)) return false;
    }
    return true;
  }
};

template <FieldScalar S>
GradedMatrixComplex<S> koszul_complex(int n, std::span<const S> v, const S& global_sign = S(1)) {
  GradedMatrixComplex<S> cx;
  cx.n = n;
  for (int k = 0; k <= n; ++k) {
    cx.differentials.push_back(wedge_by_vector<S>(n, v, k).scaled(global_sign));
  }
  return cx;
}

/// Ranks h^k = C(n,k) - rank D_k - rank D_{k-1}, k = 0..n.
template <FieldScalar S>
std::vector<int> cohomology_ranks(const GradedMatrixComplex<S>& cx, double tol = kDefaultTolerance) {
  if (static_cast<int>(cx.differentials.size()) != cx.n + 1) throw RankMismatch("complex must carry n+1 differentials");
  const double composite_tol = is_exact_v<S> ? 0.0 : tol;
  if (!cx.is_complex(composite_tol)) throw NotAComplex("D_{k+1} D_k is not zero");
  std::vector<std::size_t> r;
  for (const auto& d : cx.differentials) r.push_back(rank(d, tol));
  std::vector<int> h;
  for (int k = 0; k <= cx.n; ++k) {
    auto prev = k > 0 ? r[static_cast<std::size_t>(k - 1)] : 0;
    h.push_back(static_cast<int>(binomial(cx.n, k)) - static_cast<int>(r[static_cast<std::size_t>(k)]) - static_cast<int>(prev));
  }
  return h;
}

}  // namespace cfloer
