#pragma once

#include <complex>
#include <concepts>
#include <string>

#include "cfloer/scalars/approx_complex.hpp"
#include "cfloer/scalars/cyclotomic.hpp"

namespace cfloer {

enum class Backend { Exact, Approx };

inline const char* backend_name(Backend b) { return b == Backend::Exact ? "exact" : "approx"; }

/// Scalars usable as coefficients of exterior classes and matrices.
template <class S>
concept FieldScalar = std::copyable<S> && requires(const S a, const S b, double tol) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a.inverse() } -> std::convertible_to<S>;
  { is_zero(a, tol) } -> std::same_as<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
  { a.to_complex() } -> std::same_as<std::complex<double>>;
  S(0);
  S(1);
};

template <class S>
struct backend_of;
template <>
struct backend_of<Cyclotomic> {
  static constexpr Backend value = Backend::Exact;
};
template <>
struct backend_of<ApproxComplex> {
  static constexpr Backend value = Backend::Approx;
};

template <class S>
inline constexpr bool is_exact_v = backend_of<S>::value == Backend::Exact;

inline ApproxComplex to_approx(const Cyclotomic& x) { return ApproxComplex(x.to_complex()); }
inline ApproxComplex to_approx(const ApproxComplex& x) { return x; }

static_assert(FieldScalar<Cyclotomic>);
static_assert(FieldScalar<ApproxComplex>);

}  // namespace cfloer
