#pragma once

// Holonomies of a flat line bundle along the generating loops L_1..L_n.
//
// The holonomy around the boundary of beta_0 is h_0 = (h_1 h_2 ... h_n)^{-1},
// since that boundary is homologous to -L_1 - ... - L_n. Every exponent is -1;
// for constant holonomies h_j = zeta_{n+1}^k this gives h_0 = h_j.

#include <cmath>
#include <string>
#include <vector>

#include "cfloer/errors.hpp"
#include "cfloer/scalars/field.hpp"
#include "cfloer/scalars/holonomy_text.hpp"

namespace cfloer {

template <FieldScalar S>
class HolonomyAssignment {
 public:
  /// h holds (h_1, ..., h_n); each must have modulus 1 (exactly, or within tol).
  explicit HolonomyAssignment(std::vector<S> h, double tol = kDefaultTolerance) : h_(std::move(h)) {
    if (h_.empty()) throw DomainError("holonomy assignment needs n >= 1 entries");
    S product(1);
    for (const auto& x : h_) {
      if constexpr (is_exact_v<S>) {
        if (!(x * x.conj() == S(1))) throw DomainError("holonomy " + to_string(x) + " is not a unit scalar");
      } else {
        if (!(std::abs(x.abs() - 1.0) <= tol)) throw DomainError("holonomy " + to_string(x) + " is not a unit scalar");
      }
      product = product * x;
    }
    h0_ = product.inverse();
  }

  static HolonomyAssignment trivial(int n) { return HolonomyAssignment(std::vector<S>(static_cast<std::size_t>(n), S(1))); }

  static HolonomyAssignment from_text(const std::vector<UnitScalar>& entries, double tol = kDefaultTolerance) {
    std::vector<S> h;
    for (const auto& e : entries) h.push_back(e.template as<S>());
    return HolonomyAssignment(std::move(h), tol);
  }

  int rank() const noexcept { return static_cast<int>(h_.size()); }
  /// h_j for j = 0..n; h_0 is derived.
  const S& operator[](int j) const { return j == 0 ? h0_ : h_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<S>& generators() const noexcept { return h_; }
  const S& h0() const noexcept { return h0_; }

 private:
  std::vector<S> h_;
  S h0_;
};

}  // namespace cfloer
