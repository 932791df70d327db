#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "cfloer/errors.hpp"

namespace cfloer {

/// A class in pi_2(P^n, T^n), written as mu_0 beta_0 + ... + mu_n beta_n with
/// mu_i >= 0 (the classes that can carry holomorphic discs).
struct HomotopyClass {
  std::vector<int> mu;

  static HomotopyClass beta(int i, int n) {
    HomotopyClass b;
    b.mu.assign(static_cast<std::size_t>(n) + 1, 0);
    b.mu.at(static_cast<std::size_t>(i)) = 1;
    return b;
  }

  int rank() const noexcept { return static_cast<int>(mu.size()) - 1; }
  int maslov_index() const { return 2 * std::accumulate(mu.begin(), mu.end(), 0); }
  bool is_zero() const {
    for (int m : mu)
      if (m != 0) return false;
    return true;
  }
  int support_size() const {
    int s = 0;
    for (int m : mu) s += m > 0 ? 1 : 0;
    return s;
  }

  /// Boundary class in H_1(T^n) = Z^n, using d(beta_0) = -(L_1 + ... + L_n).
  std::vector<int> boundary() const {
    std::vector<int> b;
    for (std::size_t j = 1; j < mu.size(); ++j) b.push_back(mu[j] - mu[0]);
    return b;
  }

  friend HomotopyClass operator+(const HomotopyClass& a, const HomotopyClass& b) {
    if (a.mu.size() != b.mu.size()) throw RankMismatch("adding classes of different rank");
    HomotopyClass c = a;
    for (std::size_t i = 0; i < c.mu.size(); ++i) c.mu[i] += b.mu[i];
    return c;
  }
  friend bool operator==(const HomotopyClass&, const HomotopyClass&) = default;
};

/// (mu(b) - 1) - #{i : mu_i > 0}. Through a fixed point, ev_0 of the discs in
/// class b sweeps out at most #{i : mu_i > 0} dimensions, while the chain
/// delta_b <pt> has dimension mu(b) - 1. A positive deficit forces delta_b = 0.
inline int dimension_deficit(const HomotopyClass& b) {
  for (int m : b.mu)
    if (m < 0) throw DomainError("homotopy class coefficients must be >= 0");
  if (b.is_zero()) throw DomainError("dimension deficit is undefined for the zero class");
  return (b.maslov_index() - 1) - b.support_size();
}

/// All classes with sum mu_i = total, in lexicographic order of mu.
inline std::vector<HomotopyClass> classes_with_total(int n, int total) {
  std::vector<HomotopyClass> out;
  std::vector<int> mu(static_cast<std::size_t>(n) + 1, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == mu.size() - 1) {
      mu[i] = left;
      out.push_back(HomotopyClass{mu});
      return;
    }
    for (int m = left; m >= 0; --m) {
      mu[i] = m;
      self(self, i + 1, left - m);
    }
  };
  rec(rec, 0, total);
  return out;
}

}  // namespace cfloer
