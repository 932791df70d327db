#pragma once

// Finite elements of the Novikov ring: sums  sum_i c_i e^{d_i}  with d_i >= 0.
// The formal variable e has degree 2.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cfloer/errors.hpp"
#include "cfloer/scalars/field.hpp"

namespace cfloer {

inline constexpr int kNovikovVariableDegree = 2;

template <FieldScalar S>
class NovikovElement {
 public:
  struct Term {
    S coeff;
    int exponent;
  };

  NovikovElement() = default;
  explicit NovikovElement(std::vector<Term> terms, double tol = kDefaultTolerance) : terms_(std::move(terms)) {
    normalize(tol);
  }

  static NovikovElement monomial(S c, int exponent) { return NovikovElement({Term{std::move(c), exponent}}); }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  /// Total degree of the term with exponent d, on top of a cochain degree.
  static int degree(int exponent, int cochain_degree = 0) {
    return kNovikovVariableDegree * exponent + cochain_degree;
  }

  friend NovikovElement operator+(const NovikovElement& a, const NovikovElement& b) {
    std::vector<Term> all = a.terms_;
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    return NovikovElement(std::move(all));
  }

  /// "c0*e^0 + c1*e^1"; composite coefficients are parenthesized.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) out += " + ";
      std::string c = to_string(terms_[i].coeff);
      if (c.find_first_of(" ,") != std::string::npos) c = "(" + c + ")";
      out += c + "*e^" + std::to_string(terms_[i].exponent);
    }
    return out;
  }

 private:
  void normalize(double tol) {
    for (const auto& t : terms_)
      if (t.exponent < 0) throw DomainError("Novikov exponent must be >= 0, got " + std::to_string(t.exponent));
    std::stable_sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
    std::vector<Term> merged;
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().exponent == t.exponent)
        merged.back().coeff = merged.back().coeff + t.coeff;
      else
        merged.push_back(std::move(t));
    }
    std::erase_if(merged, [tol](const Term& t) { return is_zero(t.coeff, tol); });
    terms_ = std::move(merged);
  }

  std::vector<Term> terms_;
};

template <FieldScalar S>
NovikovElement<S> novikov_normalize(std::vector<typename NovikovElement<S>::Term> terms, double tol = kDefaultTolerance) {
  return NovikovElement<S>(std::move(terms), tol);
}

}  // namespace cfloer
