#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "cfloer/errors.hpp"
#include "cfloer/exterior/index_set.hpp"
#include "cfloer/scalars/field.hpp"

namespace cfloer {

/// A formal combination  sum_I a_I L_I  in the exterior algebra on
/// generators L_1, ..., L_n. The empty index set is the unit 1.
template <FieldScalar S>
class ExteriorClass {
 public:
  explicit ExteriorClass(int n) : n_(n) {
    if (n < 0 || n > kMaxRank) throw IndexError("rank out of range");
  }

  static ExteriorClass unit(int n) { return basis_element(n, IndexSet{}); }
  static ExteriorClass basis_element(int n, IndexSet s, S coeff = S(1)) {
    ExteriorClass x(n);
    x.add(s, std::move(coeff));
    return x;
  }
  /// L_1 ^ ... ^ L_n
  static ExteriorClass top(int n) { return basis_element(n, IndexSet::full(n)); }

  int rank() const noexcept { return n_; }
  const std::map<IndexSet, S>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  S coefficient(IndexSet s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? S(0) : it->second;
  }

  void add(IndexSet s, const S& c, double tol = 0.0) {
    if (s.max_member() > n_) throw IndexError("index set " + s.str() + " exceeds rank " + std::to_string(n_));
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) it->second = it->second + c;
    if (cfloer::is_zero(it->second, tol)) terms_.erase(it);
  }

  friend ExteriorClass operator+(ExteriorClass a, const ExteriorClass& b) {
    if (a.n_ != b.n_) throw RankMismatch("adding classes of different rank");
    for (const auto& [s, c] : b.terms_) a.add(s, c);
    return a;
  }

  ExteriorClass scaled(const S& k) const {
    ExteriorClass out(n_);
    for (const auto& [s, c] : terms_) out.add(s, c * k);
    return out;
  }

  /// L_j ^ this
  ExteriorClass wedge_generator(int j) const {
    ExteriorClass out(n_);
    for (const auto& [s, c] : terms_) {
      auto [sign, t] = insert_sign(j, s, n_);
      if (sign != 0) out.add(t, sign > 0 ? c : -c);
    }
    return out;
  }

  /// (sum_j v_j L_j) ^ this
  ExteriorClass wedge_vector(std::span<const S> v) const {
    if (static_cast<int>(v.size()) != n_) throw RankMismatch("vector length does not match rank");
    ExteriorClass out(n_);
    for (int j = 1; j <= n_; ++j) {
      if (cfloer::is_zero(v[j - 1], 0.0)) continue;
      out = out + wedge_generator(j).scaled(v[j - 1]);
    }
    return out;
  }

  /// Drops coefficients that are zero within tol.
  ExteriorClass normalized(double tol) const {
    ExteriorClass out(n_);
    for (const auto& [s, c] : terms_)
      if (!cfloer::is_zero(c, tol)) out.terms_.emplace(s, c);
    return out;
  }

  /// e.g. "(1 - zeta3^2)*L{1} + 2*L{1,2}"; the unit prints as L{}.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + to_string(c) + ")*L" + s.str();
    }
    return out;
  }

 private:
  int n_;
  std::map<IndexSet, S> terms_;
};

}  // namespace cfloer
