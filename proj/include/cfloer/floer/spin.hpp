#pragma once

#include <string>
#include <vector>

#include "cfloer/errors.hpp"
#include "cfloer/exterior/index_set.hpp"

namespace cfloer {

/// Spin structure on T^n as a sign vector (eps_0, ..., eps_n) with
/// eps_0 * eps_1 * ... * eps_n = 1. Flipping eps_i multiplies the
/// contribution of the Maslov-2 class beta_i by -1.
class SpinStructure {
 public:
  explicit SpinStructure(std::vector<int> eps) : eps_(std::move(eps)) {
    if (eps_.size() < 2) throw DomainError("spin structure needs n+1 >= 2 signs");
    int product = 1;
    for (int e : eps_) {
      if (e != 1 && e != -1) throw DomainError("spin signs must be +1 or -1");
      product *= e;
    }
    if (product != 1) throw DomainError("spin signs must multiply to +1");
  }

  /// eps_i = -1 exactly for i in twisted (i >= 1); eps_0 is then forced.
  static SpinStructure from_subset(IndexSet twisted, int n) {
    if (twisted.max_member() > n) throw IndexError("spin subset " + twisted.str() + " exceeds rank " + std::to_string(n));
    std::vector<int> eps(static_cast<std::size_t>(n) + 1, 1);
    for (int i : twisted.members()) eps[static_cast<std::size_t>(i)] = -1;
    eps[0] = (twisted.size() % 2 == 0) ? 1 : -1;
    return SpinStructure(std::move(eps));
  }
  static SpinStructure standard(int n) { return from_subset(IndexSet{}, n); }

  int rank() const noexcept { return static_cast<int>(eps_.size()) - 1; }
  const std::vector<int>& eps() const noexcept { return eps_; }
  int eps(int i) const { return eps_.at(static_cast<std::size_t>(i)); }

  /// The subset {i >= 1 : eps_i = -1}.
  IndexSet twisted() const {
    std::uint32_t mask = 0;
    for (int i = 1; i <= rank(); ++i)
      if (eps_[static_cast<std::size_t>(i)] == -1) mask |= 1u << (i - 1);
    return IndexSet::from_mask(mask);
  }

  bool is_standard() const {
    for (int e : eps_)
      if (e != 1) return false;
    return true;
  }
  bool is_all_twisted() const {
    for (int e : eps_)
      if (e != -1) return false;
    return true;
  }

  /// "[1,-1,-1]"
  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < eps_.size(); ++i) s += (i ? "," : "") + std::to_string(eps_[i]);
    return s + "]";
  }

  friend bool operator==(const SpinStructure&, const SpinStructure&) = default;

 private:
  std::vector<int> eps_;
};

inline SpinStructure spin_from_subset(IndexSet twisted, int n) { return SpinStructure::from_subset(twisted, n); }

}  // namespace cfloer
