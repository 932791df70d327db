#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_m).
//
// An element of order m is stored as its coefficient vector in the power
// basis 1, zeta, ..., zeta^{phi(m)-1}, i.e. as the remainder of a polynomial
// in zeta modulo the m-th cyclotomic polynomial. That remainder is unique, so
// zero testing and equality are exact coefficient comparisons.
//
// Binary operations on elements of different orders first lift both operands
// to Q(zeta_L), L = lcm of the orders. Elements that happen to be rational are
// always stored with order 1, so e.g. zeta_2 and -1 share one representation.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cfloer/errors.hpp"
#include "cfloer/scalars/rational.hpp"

namespace cfloer {

namespace detail {

using RatPoly = std::vector<Rational>;  // low degree first

inline void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of num by a monic integer polynomial.
inline std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> num, const std::vector<std::int64_t>& div) {
  const std::ptrdiff_t dd = static_cast<std::ptrdiff_t>(div.size()) - 1;
  std::vector<std::int64_t> q(num.size() - div.size() + 1, 0);
  for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(num.size()) - 1; i >= dd; --i) {
    const std::int64_t c = num[i];
    q[i - dd] = c;
    for (std::ptrdiff_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * div[j];
  }
  return q;
}

inline const std::vector<std::int64_t>& cyclotomic_polynomial_locked(unsigned m,
                                                                    std::map<unsigned, std::vector<std::int64_t>>& cache) {
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  std::vector<std::int64_t> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) num = divide_monic(std::move(num), cyclotomic_polynomial_locked(d, cache));
  return cache[m] = std::move(num);
}

// Integer coefficients of Phi_m, computed as (x^m - 1) / prod_{d | m, d < m} Phi_d.
inline const std::vector<std::int64_t>& cyclotomic_polynomial(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<std::int64_t>> cache;
  std::lock_guard<std::mutex> lock(mu);
  return cyclotomic_polynomial_locked(m, cache);
}

inline unsigned euler_phi(unsigned m) { return static_cast<unsigned>(cyclotomic_polynomial(m).size() - 1); }

// Remainder of p modulo the monic integer polynomial phi.
inline RatPoly reduce_mod(RatPoly p, const std::vector<std::int64_t>& phi) {
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    for (std::size_t j = 0; j <= deg; ++j) p[i - deg + j] -= c * phi[j];
  }
  p.resize(deg, Rational(0));
  return p;
}

inline RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Quotient and remainder of a / b over Q; b must be nonzero after trimming.
inline std::pair<RatPoly, RatPoly> poly_divmod(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) return {{}, a};
  RatPoly q(a.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  const std::ptrdiff_t db = static_cast<std::ptrdiff_t>(b.size()) - 1;
  for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(a.size()) - 1; i >= db; --i) {
    Rational c = a[i] / lead;
    q[i - db] = c;
    if (c != 0)
      for (std::ptrdiff_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  trim(a);
  return {q, a};
}

}  // namespace detail

class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(Rational(0)) {}
  Cyclotomic(Rational r) : order_(1), coeffs_{std::move(r)} {}  // NOLINT: implicit by intent
  Cyclotomic(int r) : Cyclotomic(Rational(r)) {}                 // NOLINT

  /// Builds sum_k c[k] zeta_m^k from a coefficient vector of any length
  /// (indices are read modulo m) and reduces it to canonical form.
  static Cyclotomic from_powers(unsigned m, const std::vector<Rational>& c) {
    if (m == 0) throw InvalidOrder("cyclotomic order must be positive");
    detail::RatPoly folded(m, Rational(0));
    for (std::size_t k = 0; k < c.size(); ++k) folded[k % m] += c[k];
    return Cyclotomic(m, detail::reduce_mod(std::move(folded), detail::cyclotomic_polynomial(m)));
  }

  /// zeta_q^p = exp(2 pi i p / q).
  static Cyclotomic root_of_unity(long long p, long long q) {
    if (q <= 0) throw InvalidOrder("root_of_unity: order must be >= 1, got " + std::to_string(q));
    long long r = ((p % q) + q) % q;
    long long g = std::gcd(r, q);
    unsigned m = static_cast<unsigned>(q / g);
    std::vector<Rational> c(static_cast<std::size_t>(r / g) + 1, Rational(0));
    c.back() = 1;
    return from_powers(m, c);
  }

  unsigned order() const noexcept { return order_; }
  /// Coefficients in the basis 1, zeta_m, ..., zeta_m^{phi(m)-1}.
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }
  bool is_rational() const { return order_ == 1; }

  /// Re-expresses this element in Q(zeta_target); order() must divide target.
  Cyclotomic lift(unsigned target) const {
    if (target % order_ != 0) throw InvalidOrder("cannot lift order " + std::to_string(order_) + " to " + std::to_string(target));
    if (target == order_) return *this;
    const unsigned step = target / order_;
    std::vector<Rational> c(target, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k * step] = coeffs_[k];
    return raw_from_powers(target, std::move(c));
  }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    const unsigned m = std::lcm(a.order_, b.order_);
    Cyclotomic x = a.lift(m), y = b.lift(m);
    for (std::size_t k = 0; k < x.coeffs_.size(); ++k) x.coeffs_[k] += y.coeffs_[k];
    return x.simplified();
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    const unsigned m = std::lcm(a.order_, b.order_);
    Cyclotomic x = a.lift(m), y = b.lift(m);
    auto prod = detail::poly_mul(x.coeffs_, y.coeffs_);
    return Cyclotomic(m, detail::reduce_mod(std::move(prod), detail::cyclotomic_polynomial(m)));
  }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return (a - b).is_zero(); }

  /// Multiplicative inverse via the extended Euclidean algorithm against Phi_m.
  Cyclotomic inverse() const {
    if (is_zero()) throw DomainError("inverse of zero cyclotomic element");
    if (order_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);
    const auto& phi = detail::cyclotomic_polynomial(order_);
    detail::RatPoly r0(phi.begin(), phi.end()), r1 = coeffs_;
    detail::RatPoly s0, s1{Rational(1)};
    detail::trim(r1);
    // invariant: s_i * a == r_i  (mod Phi_m)
    while (r1.size() > 1) {
      auto [q, r] = detail::poly_divmod(r0, r1);
      auto qs = detail::poly_mul(q, s1);
      detail::RatPoly s2(std::max(s0.size(), qs.size()), Rational(0));
      for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
      for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r1 is a nonzero constant since Phi_m is irreducible.
    for (auto& c : s1) c /= r1[0];
    return Cyclotomic(order_, detail::reduce_mod(std::move(s1), phi));
  }

  /// Complex conjugation: zeta -> zeta^{-1}.
  Cyclotomic conj() const {
    std::vector<Rational> c(order_, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[(order_ - k) % order_] += coeffs_[k];
    return from_powers(order_, c);
  }

  Cyclotomic pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic result(1), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  std::complex<double> to_complex() const {
    std::complex<double> z = 0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / order_;
      z += static_cast<double>(coeffs_[k]) * std::polar(1.0, angle);
    }
    return z;
  }

  /// e.g. "1", "-1/2", "1 + 2*zeta5^3"
  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Rational& c = coeffs_[k];
      if (c == 0) continue;
      Rational mag = c < 0 ? Rational(-c) : c;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (k == 0) {
        os << mag.str();
      } else {
        if (mag != 1) os << mag.str() << "*";
        os << "zeta" << order_;
        if (k > 1) os << "^" << k;
      }
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  Cyclotomic(unsigned m, std::vector<Rational> canonical) : order_(m), coeffs_(std::move(canonical)) {
    *this = simplified();
  }

  static Cyclotomic raw_from_powers(unsigned m, std::vector<Rational> c) {
    Cyclotomic out;
    out.order_ = m;
    out.coeffs_ = detail::reduce_mod(std::move(c), detail::cyclotomic_polynomial(m));
    return out;
  }

  // Drops to order 1 when only the constant coefficient survives.
  Cyclotomic simplified() const {
    if (order_ == 1) return *this;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
      if (coeffs_[k] != 0) return *this;
    Cyclotomic r;
    r.coeffs_[0] = coeffs_.empty() ? Rational(0) : coeffs_[0];
    return r;
  }

  unsigned order_;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const Cyclotomic& x, double /*tol*/ = 0.0) { return x.is_zero(); }
inline std::string to_string(const Cyclotomic& x) { return x.str(); }
inline Cyclotomic root_of_unity(long long p, long long q) { return Cyclotomic::root_of_unity(p, q); }

}  // namespace cfloer
