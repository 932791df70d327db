#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cfloer/errors.hpp"

namespace cfloer {

/// Largest ambient rank supported by the bitmask representation and the
/// dense basis lookup tables.
inline constexpr int kMaxRank = 20;

/// A subset of {1, ..., n}, stored as a bitmask (bit j-1 for member j).
/// Iteration yields members in increasing order.
class IndexSet {
 public:
  constexpr IndexSet() = default;

  /// Members must be strictly increasing and lie in 1..n.
  IndexSet(std::initializer_list<int> members, int n = kMaxRank) : IndexSet(std::vector<int>(members), n) {}
  explicit IndexSet(const std::vector<int>& members, int n = kMaxRank) {
    int prev = 0;
    for (int m : members) {
      if (m <= prev) throw IndexError("index set must be strictly increasing");
      if (m > n) throw IndexError("index " + std::to_string(m) + " exceeds rank " + std::to_string(n));
      mask_ |= bit(m);
      prev = m;
    }
  }

  static constexpr IndexSet from_mask(std::uint32_t mask) {
    IndexSet s;
    s.mask_ = mask;
    return s;
  }
  /// {1, ..., n}
  static constexpr IndexSet full(int n) { return from_mask(n >= 32 ? ~0u : ((1u << n) - 1u)); }

  constexpr std::uint32_t mask() const noexcept { return mask_; }
  constexpr int size() const noexcept { return std::popcount(mask_); }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr bool contains(int j) const noexcept { return j >= 1 && j <= 32 && (mask_ & bit(j)) != 0; }
  constexpr int max_member() const noexcept { return mask_ == 0 ? 0 : 32 - std::countl_zero(mask_); }

  /// Number of members strictly below j.
  constexpr int count_below(int j) const noexcept { return std::popcount(mask_ & (bit(j) - 1u)); }

  constexpr IndexSet with(int j) const noexcept { return from_mask(mask_ | bit(j)); }
  constexpr IndexSet without(int j) const noexcept { return from_mask(mask_ & ~bit(j)); }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint32_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  /// "{1,3}"; the empty set prints as "{}".
  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int m : members()) {
      if (!first) s += ",";
      s += std::to_string(m);
      first = false;
    }
    return s + "}";
  }

  friend constexpr bool operator==(IndexSet a, IndexSet b) noexcept { return a.mask_ == b.mask_; }

  /// Graded lexicographic order: smaller sets first, then lexicographic on
  /// the increasing member lists.
  friend bool operator<(IndexSet a, IndexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    auto ma = a.members(), mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
  }

 private:
  static constexpr std::uint32_t bit(int j) noexcept { return 1u << (j - 1); }
  std::uint32_t mask_ = 0;
};

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// All k-subsets of {1..n} in lexicographic order of their member lists.
inline std::vector<IndexSet> basis(int n, int k) {
  if (n < 0 || n > kMaxRank) throw IndexError("rank " + std::to_string(n) + " outside 0.." + std::to_string(kMaxRank));
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    std::uint32_t mask = 0;
    for (int m : cur) mask |= 1u << (m - 1);
    out.push_back(IndexSet::from_mask(mask));
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

/// Position lookup for one graded piece of the basis.
class BasisIndex {
 public:
  BasisIndex(int n, int k) : sets_(basis(n, k)), position_(std::size_t{1} << n, -1) {
    for (std::size_t i = 0; i < sets_.size(); ++i) position_[sets_[i].mask()] = static_cast<int>(i);
  }
  const std::vector<IndexSet>& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }
  int position(IndexSet s) const { return s.mask() < position_.size() ? position_[s.mask()] : -1; }

 private:
  std::vector<IndexSet> sets_;
  std::vector<int> position_;
};

/// L_j wedge L_I = sign * L_{I u {j}}. The sign is 0 when j is already in I,
/// otherwise (-1)^{#{i in I : i < j}}.
inline std::pair<int, IndexSet> insert_sign(int j, IndexSet s, int n) {
  if (j < 1 || j > n) throw IndexError("generator " + std::to_string(j) + " outside 1.." + std::to_string(n));
  if (s.contains(j)) return {0, s};
  return {(s.count_below(j) % 2 == 0) ? 1 : -1, s.with(j)};
}

}  // namespace cfloer
