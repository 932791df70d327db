#pragma once

// Text form of unit scalars used as holonomies.
//
//   "p/q"    exact:  exp(2 pi i p/q), routed to the cyclotomic backend
//   "re,im"  approx: the complex number re + i im, must have modulus 1
//
// A list is written by joining entries with ',' (or ';'). A comma-separated
// token containing '/' is an exact entry; any other token is paired with the
// token after it to form "re,im". So "1/3,1/3" is two exact entries and
// "0.5,0.8660254037844386;1,0" is two approximate entries.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cfloer/errors.hpp"
#include "cfloer/scalars/field.hpp"
#include "cfloer/scalars/rational.hpp"

namespace cfloer {

class UnitScalar {
 public:
  /// exp(2 pi i * turn).
  static UnitScalar from_turn(Rational turn) {
    UnitScalar u;
    // Keep the canonical representative in [0, 1).
    BigInt num = numerator(turn), den = denominator(turn);
    num %= den;
    if (num < 0) num += den;
    u.turn_ = Rational(num, den);
    return u;
  }

  static UnitScalar from_complex(double re, double im, double tol = kDefaultTolerance) {
    const double mod = std::hypot(re, im);
    if (!(std::abs(mod - 1.0) <= tol))
      throw DomainError("holonomy must have modulus 1 (got |z| = " + std::to_string(mod) + ")");
    UnitScalar u;
    u.value_ = ApproxComplex(re, im);
    return u;
  }

  bool is_exact() const noexcept { return turn_.has_value(); }
  const std::optional<Rational>& turn() const noexcept { return turn_; }

  Cyclotomic exact() const {
    if (!turn_) throw DomainError("approximate holonomy has no exact value");
    return root_of_unity(static_cast<long long>(numerator(*turn_)), static_cast<long long>(denominator(*turn_)));
  }

  ApproxComplex approx() const {
    if (!turn_) return value_;
    return ApproxComplex::polar(2.0 * std::numbers::pi * static_cast<double>(*turn_));
  }

  template <class S>
  S as() const {
    if constexpr (std::is_same_v<S, Cyclotomic>)
      return exact();
    else
      return approx();
  }

  std::string str() const { return turn_ ? turn_->str() + (denominator(*turn_) == 1 ? "/1" : "") : value_.str(); }

 private:
  std::optional<Rational> turn_;
  ApproxComplex value_;
};

namespace detail {
inline std::string_view trim_ws(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline double parse_double(std::string_view s) {
  std::string str(trim_ws(s));
  if (str.empty()) throw ParseError("empty number");
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(str, &used);
  } catch (const std::exception&) {
    throw ParseError("bad number '" + str + "'");
  }
  if (used != str.size()) throw ParseError("bad number '" + str + "'");
  return v;
}
}  // namespace detail

/// Parses a single "p/q" or "re,im" entry.
inline UnitScalar parse_holonomy(std::string_view text, double tol = kDefaultTolerance) {
  text = detail::trim_ws(text);
  if (text.find('/') != std::string_view::npos) {
    Rational r = parse_rational(text);
    return UnitScalar::from_turn(r);
  }
  auto comma = text.find(',');
  if (comma == std::string_view::npos) throw ParseError("holonomy '" + std::string(text) + "' is neither p/q nor re,im");
  return UnitScalar::from_complex(detail::parse_double(text.substr(0, comma)), detail::parse_double(text.substr(comma + 1)), tol);
}

inline std::vector<UnitScalar> parse_holonomy_list(std::string_view text, double tol = kDefaultTolerance) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : text) {
    if (ch == ',' || ch == ';') {
      tokens.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  tokens.push_back(cur);
  std::vector<UnitScalar> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto tok = detail::trim_ws(tokens[i]);
    if (tok.empty()) throw ParseError("empty holonomy entry in '" + std::string(text) + "'");
    if (tok.find('/') != std::string_view::npos) {
      out.push_back(parse_holonomy(tok, tol));
      continue;
    }
    if (i + 1 >= tokens.size()) throw ParseError("dangling real part '" + std::string(tok) + "' in holonomy list");
    out.push_back(parse_holonomy(std::string(tok) + "," + tokens[i + 1], tol));
    ++i;
  }
  return out;
}

}  // namespace cfloer
