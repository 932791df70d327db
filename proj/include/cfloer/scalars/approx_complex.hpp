#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

#include "cfloer/errors.hpp"

namespace cfloer {

/// Default tolerance for the floating-point backend.
inline constexpr double kDefaultTolerance = 1e-9;

/// Complex floating-point scalar. Zero tests take an explicit tolerance;
/// arithmetic is plain IEEE complex arithmetic.
class ApproxComplex {
 public:
  ApproxComplex() = default;
  ApproxComplex(double re, double im = 0.0) : value_(re, im) {}  // NOLINT
  ApproxComplex(int re) : value_(static_cast<double>(re), 0.0) {}  // NOLINT
  explicit ApproxComplex(std::complex<double> z) : value_(z) {}

  static ApproxComplex polar(double angle) { return ApproxComplex(std::polar(1.0, angle)); }

  double re() const noexcept { return value_.real(); }
  double im() const noexcept { return value_.imag(); }
  double abs() const { return std::abs(value_); }
  std::complex<double> value() const noexcept { return value_; }

  bool is_zero(double tol = kDefaultTolerance) const { return std::abs(value_) < tol; }

  ApproxComplex operator-() const { return ApproxComplex(-value_); }
  friend ApproxComplex operator+(ApproxComplex a, ApproxComplex b) { return ApproxComplex(a.value_ + b.value_); }
  friend ApproxComplex operator-(ApproxComplex a, ApproxComplex b) { return ApproxComplex(a.value_ - b.value_); }
  friend ApproxComplex operator*(ApproxComplex a, ApproxComplex b) { return ApproxComplex(a.value_ * b.value_); }
  friend ApproxComplex operator/(ApproxComplex a, ApproxComplex b) { return ApproxComplex(a.value_ / b.value_); }
  ApproxComplex& operator+=(ApproxComplex o) { value_ += o.value_; return *this; }
  ApproxComplex& operator-=(ApproxComplex o) { value_ -= o.value_; return *this; }
  ApproxComplex& operator*=(ApproxComplex o) { value_ *= o.value_; return *this; }

  ApproxComplex inverse() const {
    if (value_ == std::complex<double>(0.0, 0.0)) throw DomainError("inverse of zero complex value");
    return ApproxComplex(1.0 / value_);
  }
  ApproxComplex conj() const { return ApproxComplex(std::conj(value_)); }

  std::complex<double> to_complex() const { return value_; }

  /// "re,im" with round-trip precision.
  std::string str() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", value_.real(), value_.imag());
    return buf;
  }

 private:
  std::complex<double> value_{0.0, 0.0};
};

inline bool is_zero(const ApproxComplex& x, double tol = kDefaultTolerance) { return x.is_zero(tol); }
inline std::string to_string(const ApproxComplex& x) { return x.str(); }

}  // namespace cfloer
