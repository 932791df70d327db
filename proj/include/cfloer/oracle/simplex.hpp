#pragma once

// Brute-force cross-checks against the (augmented) cochain complex of the
// (n-1)-simplex on vertices 1..n. A k-cochain assigns a scalar A_I to every
// k-subset I; its coboundary is
//
//     (dA)_J = sum_s (-1)^{s-1} A_{J minus its s-th element},   |J| = k + 1.
//
// Wedging by v with every v_j != 0 is this coboundary after rescaling
// L_I -> (prod_{i in I} v_i) L_I.

#include <algorithm>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cfloer/errors.hpp"
#include "cfloer/exterior/index_set.hpp"
#include "cfloer/exterior/koszul.hpp"
#include "cfloer/exterior/matrix.hpp"
#include "cfloer/floer/coboundary.hpp"
#include "cfloer/scalars/field.hpp"

namespace cfloer {

/// Matrix of the simplex coboundary from k-cochains to (k+1)-cochains, in the
/// lexicographic bases; entry (J, I) is (-1)^{s-1} when I is J without its
/// s-th element.
template <FieldScalar S>
Matrix<S> simplex_coboundary(int n, int k) {
  if (n < 1 || n > kMaxRank) throw IndexError("rank outside 1.." + std::to_string(kMaxRank));
  if (k < 0 || k >= n) throw IndexError("cochain degree " + std::to_string(k) + " outside 0.." + std::to_string(n - 1));
  BasisIndex src(n, k), dst(n, k + 1);
  Matrix<S> m(dst.size(), src.size());
  for (std::size_t row = 0; row < dst.size(); ++row) {
    const auto members = dst.sets()[row].members();
    for (std::size_t s = 0; s < members.size(); ++s) {
      const auto col = static_cast<std::size_t>(src.position(dst.sets()[row].without(members[s])));
      m(row, col) = (s % 2 == 0) ? S(1) : S(-1);
    }
  }
  return m;
}

template <FieldScalar S>
class CochainAssignment {
 public:
  /// The zero cochain.
  CochainAssignment(int n, int k) : n_(n), k_(k), basis_(std::make_shared<BasisIndex>(n, k)), values_(basis_->size(), S(0)) {}

  /// From values listed in lexicographic basis order.
  CochainAssignment(int n, int k, std::vector<S> values) : CochainAssignment(n, k) {
    if (values.size() != values_.size())
      throw RankMismatch("expected " + std::to_string(values_.size()) + " values, got " + std::to_string(values.size()));
    values_ = std::move(values);
  }

  /// From an explicit map; every k-subset must be present.
  CochainAssignment(int n, int k, const std::map<IndexSet, S>& values) : CochainAssignment(n, k) {
    if (values.size() != values_.size()) throw DomainError("cochain must assign a value to every " + std::to_string(k) + "-subset");
    for (const auto& [set, x] : values) {
      const int pos = basis_->position(set);
      if (pos < 0 || set.size() != k) throw DomainError("subset " + set.str() + " is not a " + std::to_string(k) + "-subset of 1.." + std::to_string(n));
      values_[static_cast<std::size_t>(pos)] = x;
    }
  }

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  const std::vector<IndexSet>& subsets() const noexcept { return basis_->sets(); }
  const std::vector<S>& values() const noexcept { return values_; }

  const S& at(IndexSet s) const { return values_.at(checked(s)); }
  void set(IndexSet s, S x) { values_.at(checked(s)) = std::move(x); }

  /// The (k+1)-cochain dA, for k < n.
  CochainAssignment coboundary() const {
    CochainAssignment out(n_, k_ + 1);
    const auto d = simplex_coboundary<S>(n_, k_);
    for (std::size_t r = 0; r < d.rows(); ++r) {
      S acc(0);
      for (std::size_t c = 0; c < d.cols(); ++c) acc = acc + d(r, c) * values_[c];
      out.values_[r] = acc;
    }
    return out;
  }

 private:
  std::size_t checked(IndexSet s) const {
    const int pos = basis_->position(s);
    if (pos < 0 || s.size() != k_) throw IndexError(s.str() + " is not a " + std::to_string(k_) + "-subset");
    return static_cast<std::size_t>(pos);
  }

  int n_;
  int k_;
  std::shared_ptr<const BasisIndex> basis_;
  std::vector<S> values_;
};

/// Given a k-cocycle A (k >= 1), returns B with dB = A. Uses the cone on
/// vertex 1: B_G = A_{{1} u G} when 1 is not in G, else 0. A non-cocycle
/// raises NoSolution listing every (k+1)-subset J where (dA)_J != 0.
template <FieldScalar S>
CochainAssignment<S> solve_cocycle(const CochainAssignment<S>& a, double tol = kDefaultTolerance) {
  const int n = a.n(), k = a.k();
  if (k < 1) throw DomainError("solve_cocycle needs cochain degree k >= 1");
  if (k < n) {
    const auto da = a.coboundary();
    double scale = 1.0;
    if constexpr (!is_exact_v<S>)
      for (const auto& x : a.values()) scale = std::max(scale, std::abs(x.to_complex()));
    std::vector<std::string> violated;
    for (std::size_t i = 0; i < da.values().size(); ++i)
      if (!cfloer::is_zero(da.values()[i], tol * scale)) violated.push_back(da.subsets()[i].str());
    if (!violated.empty()) throw NoSolution("cochain is not a cocycle", std::move(violated));
  }
  CochainAssignment<S> b(n, k - 1);
  for (const auto& g : b.subsets())
    if (!g.contains(1)) b.set(g, a.at(g.with(1)));
  return b;
}

/// With every v_j != 0, checks diag_{k+1}^{-1} D_k diag_k = (-1)^n d_k for
/// k = 0..n-1, where D_k is the delta_2 matrix and diag_k rescales L_I by
/// prod_{i in I} v_i. Exact comparison for exact scalars, else within tol.
template <FieldScalar S>
bool koszul_rescale_check(int n, const WeightVector<S>& w, double tol = kDefaultTolerance) {
  if (w.rank() != n) throw RankMismatch("weight rank does not match n");
  for (int j = 1; j <= n; ++j)
    if (cfloer::is_zero(w.v[static_cast<std::size_t>(j - 1)], tol)) throw PreconditionError("v_" + std::to_string(j) + " is zero");
  const auto cx = delta2_complex(w);
  const S sign = delta2_sign<S>(n);
  auto scale = [&](IndexSet s) {
    S p(1);
    for (int i : s.members()) p = p * w.v[static_cast<std::size_t>(i - 1)];
    return p;
  };
  const double cmp_tol = is_exact_v<S> ? 0.0 : tol;
  for (int k = 0; k < n; ++k) {
    BasisIndex src(n, k), dst(n, k + 1);
    const auto& d = cx.differentials[static_cast<std::size_t>(k)];
    const auto simplex = simplex_coboundary<S>(n, k);
    for (std::size_t r = 0; r < dst.size(); ++r) {
      const S row_scale = scale(dst.sets()[r]).inverse();
      for (std::size_t c = 0; c < src.size(); ++c) {
        const S lhs = row_scale * d(r, c) * scale(src.sets()[c]);
        if (!cfloer::is_zero(lhs - sign * simplex(r, c), cmp_tol)) return false;
      }
    }
  }
  return true;
}

}  // namespace cfloer
