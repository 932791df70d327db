#pragma once

// Holomorphic discs (D^2, dD^2) -> (P^n, T^n) as tuples of finite Blaschke
// products [gamma_0 : ... : gamma_n] with no common zero. Each component is
//
//     gamma_i(z) = e^{i theta_i} prod_j (z - a_ij) / (1 - conj(a_ij) z),  |a_ij| < 1,
//
// and is stored by its phase and zero list. The homotopy class is read off
// from the zero counts: mu_i = #zeros of gamma_i, Maslov index 2 sum mu_i.

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "cfloer/errors.hpp"
#include "cfloer/floer/homotopy.hpp"
#include "cfloer/scalars/approx_complex.hpp"
#include "cfloer/scalars/rational.hpp"

namespace cfloer {

using Complex = std::complex<double>;

/// re + i im with rational parts.
struct GaussianRational {
  Rational re;
  Rational im;
  Complex to_complex() const { return {static_cast<double>(re), static_cast<double>(im)}; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

class BlaschkeFactor {
 public:
  explicit BlaschkeFactor(Complex alpha) : alpha_(alpha) {
    if (!(std::abs(alpha) < 1.0)) throw DomainError("Blaschke zero must lie in the open unit disc");
  }
  explicit BlaschkeFactor(GaussianRational alpha) : alpha_(alpha.to_complex()), exact_(alpha) {
    if (!(alpha.re * alpha.re + alpha.im * alpha.im < 1)) throw DomainError("Blaschke zero must lie in the open unit disc");
  }

  Complex alpha() const noexcept { return alpha_; }
  const std::optional<GaussianRational>& exact() const noexcept { return exact_; }

  Complex operator()(Complex z) const { return (z - alpha_) / (1.0 - std::conj(alpha_) * z); }

  /// Same zero: exact comparison when both are exact, else distance < tol.
  bool same_zero(const BlaschkeFactor& o, double tol) const {
    if (exact_ && o.exact_) return *exact_ == *o.exact_;
    return std::abs(alpha_ - o.alpha_) < tol;
  }

 private:
  Complex alpha_;
  std::optional<GaussianRational> exact_;
};

class BlaschkeComponent {
 public:
  BlaschkeComponent() = default;
  BlaschkeComponent(double theta, std::vector<BlaschkeFactor> factors) : theta_(wrap(theta)), factors_(std::move(factors)) {}

  /// Phase given as a fraction of a full turn, theta = 2 pi * turn.
  static BlaschkeComponent with_turn(Rational turn, std::vector<BlaschkeFactor> factors) {
    BigInt num = numerator(turn), den = denominator(turn);
    num %= den;
    if (num < 0) num += den;
    turn = Rational(num, den);
    BlaschkeComponent c(2.0 * std::numbers::pi * static_cast<double>(turn), std::move(factors));
    c.turn_ = turn;
    return c;
  }

  double theta() const noexcept { return theta_; }
  const std::optional<Rational>& turn() const noexcept { return turn_; }
  const std::vector<BlaschkeFactor>& factors() const noexcept { return factors_; }
  int degree() const noexcept { return static_cast<int>(factors_.size()); }

  Complex operator()(Complex z) const {
    Complex v = std::polar(1.0, theta_);
    for (const auto& f : factors_) v *= f(z);
    return v;
  }

  static double wrap(double theta) {
    const double two_pi = 2.0 * std::numbers::pi;
    theta = std::fmod(theta, two_pi);
    return theta < 0 ? theta + two_pi : theta;
  }

 private:
  double theta_ = 0.0;
  std::optional<Rational> turn_;
  std::vector<BlaschkeFactor> factors_;
};

/// Moebius automorphism phi(z) = e^{i theta} (z - a) / (1 - conj(a) z), |a| < 1.
struct Moebius {
  double theta = 0.0;
  Complex a{0.0, 0.0};

  Complex operator()(Complex z) const { return std::polar(1.0, theta) * (z - a) / (1.0 - std::conj(a) * z); }
  Complex inverse(Complex z) const {
    const Complex w = std::polar(1.0, -theta) * z;
    return (w + a) / (1.0 + std::conj(a) * w);
  }
};

class BlaschkeDisc {
 public:
  /// Validates n+1 >= 2 components with no zero common to all of them.
  explicit BlaschkeDisc(std::vector<BlaschkeComponent> components, double tol = kDefaultTolerance)
      : components_(std::move(components)) {
    if (components_.size() < 2) throw DomainError("a disc in P^n needs n+1 >= 2 components");
    for (const auto& f : components_[0].factors()) {
      bool common = true;
      for (std::size_t i = 1; i < components_.size() && common; ++i) {
        bool found = false;
        for (const auto& g : components_[i].factors()) found = found || f.same_zero(g, tol);
        common = found;
      }
      if (common) {
        const Complex a = f.alpha();
        throw DegenerateDisc("all components vanish at " + std::to_string(a.real()) + (a.imag() < 0 ? "" : "+") +
                             std::to_string(a.imag()) + "i");
      }
    }
  }

  int rank() const noexcept { return static_cast<int>(components_.size()) - 1; }
  const std::vector<BlaschkeComponent>& components() const noexcept { return components_; }
  const BlaschkeComponent& component(int i) const { return components_.at(static_cast<std::size_t>(i)); }

 private:
  std::vector<BlaschkeComponent> components_;
};

inline BlaschkeDisc disc_make(std::vector<BlaschkeComponent> components, double tol = kDefaultTolerance) {
  return BlaschkeDisc(std::move(components), tol);
}

/// Homogeneous coordinates [gamma_0(z) : ... : gamma_n(z)] for |z| <= 1.
inline std::vector<Complex> disc_eval(const BlaschkeDisc& d, Complex z, double tol = kDefaultTolerance) {
  if (std::abs(z) > 1.0 + tol) throw DomainError("disc_eval needs |z| <= 1");
  std::vector<Complex> out;
  for (const auto& c : d.components()) out.push_back(c(z));
  return out;
}

inline HomotopyClass homotopy_class(const BlaschkeDisc& d) {
  HomotopyClass b;
  for (const auto& c : d.components()) b.mu.push_back(c.degree());
  return b;
}

/// Twice the total number of zeros (with multiplicity).
inline int maslov_index(const BlaschkeDisc& d) { return homotopy_class(d).maslov_index(); }

/// phi . w = w o phi^{-1}. Each gamma_i o phi^{-1} is again a Blaschke product of
/// the same degree, with zeros phi(a_ij); its phase is fixed by evaluating at z = 1.
inline BlaschkeDisc psl2_act(const BlaschkeDisc& d, const Moebius& phi) {
  if (!(std::abs(phi.a) < 1.0)) throw DomainError("Moebius parameter must lie in the open unit disc");
  std::vector<BlaschkeComponent> out;
  const Complex pre_one = phi.inverse(Complex(1.0, 0.0));
  for (const auto& c : d.components()) {
    std::vector<BlaschkeFactor> moved;
    Complex bare(1.0, 0.0);
    for (const auto& f : c.factors()) {
      BlaschkeFactor g(phi(f.alpha()));
      bare *= g(Complex(1.0, 0.0));
      moved.push_back(g);
    }
    const Complex phase = c(pre_one) / bare;
    out.emplace_back(std::arg(phase), std::move(moved));
  }
  return BlaschkeDisc(std::move(out));
}

/// Pointwise product of two discs of the same rank, component by component.
inline BlaschkeDisc disc_product(const BlaschkeDisc& a, const BlaschkeDisc& b, double tol = kDefaultTolerance) {
  if (a.rank() != b.rank()) throw RankMismatch("disc_product needs equal ranks");
  std::vector<BlaschkeComponent> out;
  for (int i = 0; i <= a.rank(); ++i) {
    auto factors = a.component(i).factors();
    const auto& more = b.component(i).factors();
    factors.insert(factors.end(), more.begin(), more.end());
    out.emplace_back(a.component(i).theta() + b.component(i).theta(), std::move(factors));
  }
  return BlaschkeDisc(std::move(out), tol);
}

/// The standard disc b_i: gamma_i(z) = z, every other component 1.
inline BlaschkeDisc standard_disc(int i, int n) {
  if (i < 0 || i > n) throw IndexError("standard disc index outside 0..n");
  std::vector<BlaschkeComponent> cs(static_cast<std::size_t>(n) + 1);
  cs[static_cast<std::size_t>(i)] = BlaschkeComponent(0.0, {BlaschkeFactor(GaussianRational{0, 0})});
  return BlaschkeDisc(std::move(cs));
}

/// The unique disc in class beta_i with marked point z = 1 mapped to
/// [1 : t_1 : ... : t_n], normalized so that the zero of gamma_i sits at 0.
/// `target` holds the n unit coordinates t_j of the affine chart x_0 != 0.
inline BlaschkeDisc solve_disc_through_point(int i, const std::vector<Complex>& target, double tol = kDefaultTolerance) {
  const int n = static_cast<int>(target.size());
  if (n < 1) throw DomainError("target needs n >= 1 coordinates");
  if (i < 0 || i > n) throw IndexError("class index outside 0..n");
  for (const auto& t : target)
    if (!(std::abs(std::abs(t) - 1.0) <= tol)) throw DomainError("target coordinates must have modulus 1");
  std::vector<BlaschkeComponent> cs;
  cs.emplace_back(0.0, std::vector<BlaschkeFactor>{});
  for (int j = 1; j <= n; ++j) cs.emplace_back(std::arg(target[static_cast<std::size_t>(j - 1)]), std::vector<BlaschkeFactor>{});
  cs[static_cast<std::size_t>(i)] = BlaschkeComponent(cs[static_cast<std::size_t>(i)].theta(), {BlaschkeFactor(GaussianRational{0, 0})});
  return BlaschkeDisc(std::move(cs), tol);
}

/// Distance between two normalized discs of the same shape: the largest phase
/// gap and zero gap over all components. Infinite when the shapes differ.
inline double disc_distance(const BlaschkeDisc& a, const BlaschkeDisc& b) {
  if (a.rank() != b.rank()) return INFINITY;
  double d = 0.0;
  for (int i = 0; i <= a.rank(); ++i) {
    const auto& ca = a.component(i);
    const auto& cb = b.component(i);
    if (ca.degree() != cb.degree()) return INFINITY;
    d = std::max(d, std::abs(std::polar(1.0, ca.theta()) - std::polar(1.0, cb.theta())));
    for (int j = 0; j < ca.degree(); ++j)
      d = std::max(d, std::abs(ca.factors()[static_cast<std::size_t>(j)].alpha() - cb.factors()[static_cast<std::size_t>(j)].alpha()));
  }
  return d;
}

}  // namespace cfloer
