#pragma once

// Orientation bookkeeping by dimension parity. An oriented space is an
// ordered product of named factors with dimensions, times a sign; moving a
// factor of dimension a past one of dimension b costs (-1)^{ab}.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cfloer/errors.hpp"

namespace cfloer {

struct OrientedFactor {
  std::string label;
  int dim = 0;
  friend bool operator==(const OrientedFactor&, const OrientedFactor&) = default;
};

class OrientedFactorization {
 public:
  OrientedFactorization() = default;
  explicit OrientedFactorization(std::vector<OrientedFactor> factors, int sign = 1) : factors_(std::move(factors)), sign_(sign) {
    if (sign_ != 1 && sign_ != -1) throw DomainError("orientation sign must be +1 or -1");
    for (const auto& f : factors_)
      if (f.dim < 0) throw DomainError("factor " + f.label + " has negative dimension");
  }

  const std::vector<OrientedFactor>& factors() const noexcept { return factors_; }
  int sign() const noexcept { return sign_; }
  int dim() const noexcept {
    int d = 0;
    for (const auto& f : factors_) d += f.dim;
    return d;
  }
  std::size_t size() const noexcept { return factors_.size(); }
  const OrientedFactor& operator[](std::size_t i) const { return factors_.at(i); }

  /// Position of the factor with this label; IndexError if absent.
  std::size_t find(const std::string& label) const {
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (factors_[i].label == label) return i;
    throw IndexError("no factor labelled " + label);
  }

  OrientedFactorization negated() const { return OrientedFactorization(factors_, -sign_); }

  std::string str() const {
    std::string s = sign_ < 0 ? "-" : "+";
    s += "[";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += " x ";
      s += factors_[i].label + ":" + std::to_string(factors_[i].dim);
    }
    return s + "]";
  }

  friend bool operator==(const OrientedFactorization&, const OrientedFactorization&) = default;

 private:
  std::vector<OrientedFactor> factors_;
  int sign_ = 1;
};

namespace detail {
inline void check_permutation(const std::vector<std::size_t>& perm, std::size_t size) {
  if (perm.size() != size) throw DomainError("permutation length does not match the factor count");
  std::vector<bool> seen(size, false);
  for (auto p : perm) {
    if (p >= size || seen[p]) throw DomainError("not a permutation");
    seen[p] = true;
  }
}
}  // namespace detail

/// Sign of reordering the factors so that position i holds old factor perm[i]:
/// the product of (-1)^{ab} over all pairs of factors whose order flips.
inline int permute_sign(const OrientedFactorization& f, const std::vector<std::size_t>& perm) {
  detail::check_permutation(perm, f.size());
  int parity = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) parity ^= (f[perm[i]].dim * f[perm[j]].dim) & 1;
  return parity ? -1 : 1;
}

/// The reordered factorization, carrying the Koszul sign.
inline OrientedFactorization permute(const OrientedFactorization& f, const std::vector<std::size_t>& perm) {
  const int s = permute_sign(f, perm);
  std::vector<OrientedFactor> out;
  for (auto p : perm) out.push_back(f[p]);
  return OrientedFactorization(std::move(out), f.sign() * s);
}

/// Moves the factor at position `from` to position `to`, shifting the rest.
inline OrientedFactorization move_factor(const OrientedFactorization& f, std::size_t from, std::size_t to) {
  if (from >= f.size() || to >= f.size()) throw IndexError("factor position out of range");
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (i != from) order.push_back(i);
  order.insert(order.begin() + static_cast<std::ptrdiff_t>(to), from);
  return permute(f, order);
}

/// Orientation of X x_f P, where X -> L has fibre X^0 (so [X] = [X^0] x [L])
/// and P is a p-cycle in L: by convention [X^0] x [P] with sign +1.
inline OrientedFactorization fibre_product_sign(int x, int l, int p) {
  if (l < 0 || p < 0 || x < l || p > l) throw DomainError("fibre product needs 0 <= p <= l <= x");
  std::vector<OrientedFactor> fs;
  if (x > l) fs.push_back({"X0", x - l});
  fs.push_back({"P", p});
  return OrientedFactorization(std::move(fs));
}

struct BoundarySigns {
  int dx = 1;  // coefficient of dX x_f P
  int dp = 1;  // coefficient of X x_f dP
  friend bool operator==(const BoundarySigns&, const BoundarySigns&) = default;
};

/// Closed form: d(X x_f P) = dX x_f P + (-1)^{x+l} X x_f dP.
inline BoundarySigns boundary_fibre_signs(int x, int l) { return {1, ((x + l) & 1) ? -1 : 1}; }

/// The same signs obtained by shuffling factors. Boundaries carry the
/// outward-normal-first convention [Y] = [R_out] x [dY].
///  - dX term: [X^0] = [R_out] x [(dX)^0], so [X^0] x [P] is already
///    [R_out] x [(dX)^0 x P].
///  - dP term: [X^0] x [P] = [X^0] x [R_out] x [dP]; R_out must move to the
///    front past X^0.
inline BoundarySigns boundary_fibre_signs_replay(int x, int l, int p) {
  if (p < 1) throw DomainError("replay needs p >= 1 so that dP exists");
  const auto base = fibre_product_sign(x, l, p);
  BoundarySigns out;

  if (x > l) {
    // R_out is already leading: no shuffle.
    out.dx = OrientedFactorization({{"R_out", 1}, {"dX0", x - l - 1}, {"P", p}}, base.sign()).sign();
  }

  std::vector<OrientedFactor> fs;
  if (x > l) fs.push_back({"X0", x - l});
  fs.push_back({"R_out", 1});
  fs.push_back({"dP", p - 1});
  OrientedFactorization dp(std::move(fs), base.sign());
  out.dp = move_factor(dp, dp.find("R_out"), 0).sign();
  return out;
}

/// Sign with which a glued pair M_2(A) x_{ev} M_2(B) appears in the boundary
/// of M_2(A + B) on an n-dimensional Lagrangian.
inline int gluing_sign(int n) { return ((n + 1) & 1) ? -1 : 1; }

/// Dimension of the moduli space of discs of Maslov index mu with `marked`
/// boundary marked points, modulo automorphisms, on an n-dimensional Lagrangian.
inline int moduli_dimension(int n, int mu, int marked = 2) { return n + mu + marked - 3; }

struct SignStep {
  std::string what;
  int exponent = 0;
};

struct SquareZeroChain {
  std::vector<SignStep> glued_steps;    // leading to the delta_{A1} o delta_{A2} term
  std::vector<SignStep> boundary_steps; // leading to the delta_A o delta_0 term
  int glued = 0;
  int boundary = 0;

  static int sign_of(const std::vector<SignStep>& steps) {
    int e = 0;
    for (const auto& s : steps) e += s.exponent;
    return (e & 1) ? -1 : 1;
  }
};

/// Replays the signs of delta_0 o delta_A on a cycle [P, f], with
/// delta_0[Q] = (-1)^n [dQ] and delta_A[P] = (-1)^n [M_2(A) x_f P]. Expanding
/// d(M_2(A) x_f P) with boundary_fibre_signs gives the two cross terms.
inline SquareZeroChain squarezero_chain(int n, int muA) {
  if (n < 1) throw DomainError("squarezero_chain needs n >= 1");
  if (muA < 2 || (muA & 1)) throw DomainError("Maslov index must be even and >= 2");
  const int x = moduli_dimension(n, muA);
  const int l = n;
  const auto b = boundary_fibre_signs_replay(x, l, 1);
  if (b != boundary_fibre_signs(x, l)) throw NotAComplex("boundary sign replay disagrees with the closed form");

  SquareZeroChain c;
  c.glued_steps = {
      {"delta_0 sign (-1)^n", n},
      {"dM_2(A) x_f P enters with +1", b.dx < 0 ? 1 : 0},
      {"gluing sign (-1)^{n+1}", n + 1},
  };
  c.boundary_steps = {
      {"delta_0 sign (-1)^n", n},
      {"M_2(A) x_f dP enters with (-1)^{x+l}", b.dp < 0 ? 1 : 0},
      {"rewrite M_2(A) x_f dP as delta_A of (-1)^n dP: (-1)^n", n},
  };
  c.glued = SquareZeroChain::sign_of(c.glued_steps);
  c.boundary = SquareZeroChain::sign_of(c.boundary_steps);
  return c;
}

/// Orientation of M_1(beta_i) via ev_0, by convention: the marked-point
/// circle dD^2 is quotiented by the S^1 of automorphisms fixing the disc,
/// leaving [T^n] with sign +1. Returns that sign.
inline int standard_point_sign(int n) {
  OrientedFactorization m({{"S1", 1}, {"T", n}});
  // Quotients are taken on the leading factor, so the convention is that the
  // S^1 orbit already sits first.
  if (m[0].label != "S1") throw DomainError("quotient factor not leading");
  return m.sign();
}

}  // namespace cfloer
