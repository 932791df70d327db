#pragma once

// The Novikov-graded Floer differential  delta = delta_0 + delta_2 e + ...
//
// In the exterior-algebra model delta_0 vanishes. Classes of Maslov index
// 4, 6, ..., 2n all have positive dimension deficit, so their contributions
// vanish too, and classes of Maslov >= 2n+2 are never reached. What is left
// is delta_2 in front of e^1 (the variable e has degree 2, and mu(beta_i)/2 = 1).

#include <map>
#include <vector>

#include "cfloer/errors.hpp"
#include "cfloer/exterior/koszul.hpp"
#include "cfloer/floer/coboundary.hpp"
#include "cfloer/floer/homotopy.hpp"
#include "cfloer/scalars/novikov.hpp"

namespace cfloer {

template <FieldScalar S>
struct NovikovOperator {
  /// One homogeneous piece: maps[k] sends Lambda^k to Lambda^{k + lambda_shift},
  /// multiplied by e^exponent.
  struct Term {
    int exponent = 0;
    int lambda_shift = 0;
    std::vector<Matrix<S>> maps;  // indexed by source degree k = 0..n
  };

  int n = 0;
  std::vector<Term> terms;
  /// Number of classes of Maslov index 4..2n dropped by the deficit argument.
  int truncated_classes = 0;

  /// Degree change in the total grading (cochain degree n - k plus 2 per e).
  static int total_degree(const Term& t) { return -t.lambda_shift + kNovikovVariableDegree * t.exponent; }

  bool is_zero(double tol = 0.0) const {
    for (const auto& t : terms)
      for (const auto& m : t.maps)
        if (!m.is_zero_matrix(tol)) return false;
    return true;
  }

  /// this o other, collected by exponent and shift.
  NovikovOperator compose(const NovikovOperator& other) const {
    std::map<std::pair<int, int>, Term> acc;
    for (const auto& a : terms)
      for (const auto& b : other.terms) {
        const int shift = a.lambda_shift + b.lambda_shift;
        auto key = std::make_pair(a.exponent + b.exponent, shift);
        auto [it, fresh] = acc.try_emplace(key);
        Term& t = it->second;
        if (fresh) {
          t.exponent = key.first;
          t.lambda_shift = shift;
          for (int k = 0; k <= n; ++k) {
            const int target = k + shift;
            const std::size_t rows = (target < 0 || target > n) ? 0 : binomial(n, target);
            t.maps.emplace_back(rows, binomial(n, k));
          }
        }
        for (int k = 0; k <= n; ++k) {
          const int mid = k + b.lambda_shift;
          if (mid < 0 || mid > n) continue;
          const int target = mid + a.lambda_shift;
          if (target < 0 || target > n) continue;
          auto prod = a.maps[static_cast<std::size_t>(mid)] * b.maps[static_cast<std::size_t>(k)];
          auto& dst = t.maps[static_cast<std::size_t>(k)];
          for (std::size_t r = 0; r < prod.rows(); ++r)
            for (std::size_t c = 0; c < prod.cols(); ++c) dst(r, c) = dst(r, c) + prod(r, c);
        }
      }
    NovikovOperator out;
    out.n = n;
    for (auto& [key, t] : acc) out.terms.push_back(std::move(t));
    return out;
  }

  bool squares_to_zero(double tol = 0.0) const { return compose(*this).is_zero(tol); }
};

template <FieldScalar S>
NovikovOperator<S> full_differential(int n, const WeightVector<S>& w) {
  if (w.rank() != n) throw RankMismatch("weight vector rank does not match n");
  NovikovOperator<S> op;
  op.n = n;

  // Maslov >= 4: every class must have positive deficit before we drop it.
  for (int total = 2; total <= n; ++total)
    for (const auto& b : classes_with_total(n, total)) {
      if (dimension_deficit(b) <= 0) throw DomainError("class with non-positive deficit at Maslov " + std::to_string(b.maslov_index()));
      ++op.truncated_classes;
    }

  typename NovikovOperator<S>::Term d0;
  d0.exponent = 0;
  d0.lambda_shift = -1;
  for (int k = 0; k <= n; ++k) d0.maps.emplace_back(k == 0 ? 0 : binomial(n, k - 1), binomial(n, k));

  typename NovikovOperator<S>::Term d2;
  d2.exponent = 1;
  d2.lambda_shift = 1;
  d2.maps = delta2_complex(w).differentials;

  op.terms.push_back(std::move(d0));
  op.terms.push_back(std::move(d2));

  const double tol = is_exact_v<S> ? 0.0 : 1e-12;
  if (!op.squares_to_zero(tol)) throw NotAComplex("Floer differential does not square to zero");
  return op;
}

}  // namespace cfloer
