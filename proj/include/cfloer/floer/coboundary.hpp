#pragma once

// The Maslov-2 part of the Floer coboundary on the Clifford torus.
//
// On the E_2 page the cochains are H^*(T^n), modelled as the exterior algebra
// on L_1..L_n with the point class as the unit and L_1^...^L_n as the
// fundamental class. Each disc class beta_i (i = 0..n) contributes
// (-1)^n c_i L_i ^ x with weight c_i = eps_i h_i. Eliminating
// L_0 = -(L_1 + ... + L_n) leaves
//
//     delta_2 x = (-1)^n (sum_{j>=1} v_j L_j) ^ x,    v_j = c_j - c_0,
//
// i.e. a Koszul differential. It vanishes iff all c_j agree, and is exact
// otherwise.

#include <span>
#include <string>
#include <vector>

#include "cfloer/errors.hpp"
#include "cfloer/exterior/exterior_class.hpp"
#include "cfloer/exterior/koszul.hpp"
#include "cfloer/floer/holonomy.hpp"
#include "cfloer/floer/spin.hpp"
#include "cfloer/scalars/field.hpp"

namespace cfloer {

template <FieldScalar S>
struct WeightVector {
  std::vector<S> c;  // c_0 .. c_n
  std::vector<S> v;  // v_1 .. v_n, v_j = c_j - c_0

  int rank() const noexcept { return static_cast<int>(v.size()); }

  bool v_is_zero(double tol = kDefaultTolerance) const {
    for (const auto& x : v)
      if (!is_zero(x, tol)) return false;
    return true;
  }

  static WeightVector from_weights(std::vector<S> c) {
    if (c.size() < 2) throw RankMismatch("weights need n+1 >= 2 entries");
    WeightVector w;
    w.c = std::move(c);
    for (std::size_t j = 1; j < w.c.size(); ++j) w.v.push_back(w.c[j] - w.c[0]);
    return w;
  }
};

/// c_j = eps_j h_j, v_j = c_j - c_0.
template <FieldScalar S>
WeightVector<S> weights(const SpinStructure& spin, const HolonomyAssignment<S>& hol) {
  if (spin.rank() != hol.rank()) throw RankMismatch("spin structure and holonomy have different rank");
  std::vector<S> c;
  for (int j = 0; j <= spin.rank(); ++j) c.push_back(spin.eps(j) > 0 ? hol[j] : -hol[j]);
  return WeightVector<S>::from_weights(std::move(c));
}

template <FieldScalar S>
S delta2_sign(int n) {
  return n % 2 == 0 ? S(1) : S(-1);
}

/// (-1)^n (sum_j v_j L_j) ^ x
template <FieldScalar S>
ExteriorClass<S> delta2(const ExteriorClass<S>& x, const WeightVector<S>& w) {
  if (x.rank() != w.rank()) throw RankMismatch("class rank " + std::to_string(x.rank()) + " vs weight rank " + std::to_string(w.rank()));
  return x.wedge_vector(std::span<const S>(w.v)).scaled(delta2_sign<S>(w.rank()));
}

/// Matrix form of delta_2, degree by degree, sign included.
template <FieldScalar S>
GradedMatrixComplex<S> delta2_complex(const WeightVector<S>& w) {
  return koszul_complex<S>(w.rank(), std::span<const S>(w.v), delta2_sign<S>(w.rank()));
}

/// Floer cohomology ranks, indexed two ways. Lambda-degree k counts
/// generators L_I with |I| = k; cochain degree is p = n - k.
struct RankTable {
  int n = 0;
  std::vector<int> by_lambda_degree;
  std::vector<int> by_cochain_degree;

  bool nonvanishing() const {
    for (int r : by_lambda_degree)
      if (r != 0) return true;
    return false;
  }

  static RankTable from_lambda(int n, std::vector<int> ranks) {
    RankTable t;
    t.n = n;
    t.by_cochain_degree.assign(ranks.rbegin(), ranks.rend());
    t.by_lambda_degree = std::move(ranks);
    return t;
  }

  friend bool operator==(const RankTable&, const RankTable&) = default;
};

/// Ranks from the matrices of delta_2 by elimination (or SVD).
template <FieldScalar S>
RankTable floer_ranks_bruteforce(int n, const WeightVector<S>& w, double tol = kDefaultTolerance) {
  if (w.rank() != n) throw RankMismatch("weight vector rank does not match n");
  return RankTable::from_lambda(n, cohomology_ranks(delta2_complex(w), tol));
}

/// Ranks by the vanishing criterion: binomial(n, k) when v = 0, zero otherwise.
template <FieldScalar S>
RankTable floer_ranks_closedform(int n, const WeightVector<S>& w, double tol = kDefaultTolerance) {
  if (w.rank() != n) throw RankMismatch("weight vector rank does not match n");
  std::vector<int> ranks(static_cast<std::size_t>(n) + 1, 0);
  if (w.v_is_zero(is_exact_v<S> ? 0.0 : tol))
    for (int k = 0; k <= n; ++k) ranks[static_cast<std::size_t>(k)] = static_cast<int>(binomial(n, k));
  return RankTable::from_lambda(n, std::move(ranks));
}

}  // namespace cfloer
