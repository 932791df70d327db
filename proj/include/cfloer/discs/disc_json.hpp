#pragma once

// Disc JSON:
//   { "components": [ { "theta": "p/q" | <radians>, "zeros": [ {"re": .., "im": ..} ] } ] }
// A "p/q" phase means theta = 2 pi p/q. Zero parts given as "p/q" strings
// (both re and im) make the zero exact.

#include <string>

#include <json.hpp>

#include "cfloer/discs/blaschke.hpp"
#include "cfloer/errors.hpp"
#include "cfloer/scalars/rational.hpp"

namespace cfloer {

inline nlohmann::json disc_to_json(const BlaschkeDisc& d) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : d.components()) {
    nlohmann::json jc;
    if (c.turn()) {
      std::string t = c.turn()->str();
      if (t.find('/') == std::string::npos) t += "/1";
      jc["theta"] = t;
    } else {
      jc["theta"] = c.theta();
    }
    jc["zeros"] = nlohmann::json::array();
    for (const auto& f : c.factors()) {
      if (f.exact())
        jc["zeros"].push_back({{"re", f.exact()->re.str()}, {"im", f.exact()->im.str()}});
      else
        jc["zeros"].push_back({{"re", f.alpha().real()}, {"im", f.alpha().imag()}});
    }
    comps.push_back(std::move(jc));
  }
  return {{"components", std::move(comps)}};
}

inline BlaschkeDisc disc_from_json(const nlohmann::json& j, double tol = kDefaultTolerance) {
  if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
    throw ParseError("disc JSON needs a \"components\" array");
  std::vector<BlaschkeComponent> cs;
  for (const auto& jc : j["components"]) {
    std::vector<BlaschkeFactor> factors;
    if (jc.contains("zeros")) {
      for (const auto& z : jc["zeros"]) {
        if (!z.contains("re") || !z.contains("im")) throw ParseError("zero needs \"re\" and \"im\"");
        if (z["re"].is_string() && z["im"].is_string())
          factors.emplace_back(GaussianRational{parse_rational(z["re"].get<std::string>()), parse_rational(z["im"].get<std::string>())});
        else if (z["re"].is_number() && z["im"].is_number())
          factors.emplace_back(Complex(z["re"].get<double>(), z["im"].get<double>()));
        else
          throw ParseError("zero parts must both be numbers or both be \"p/q\" strings");
      }
    }
    const auto& th = jc.contains("theta") ? jc["theta"] : nlohmann::json(0.0);
    if (th.is_string())
      cs.push_back(BlaschkeComponent::with_turn(parse_rational(th.get<std::string>()), std::move(factors)));
    else if (th.is_number())
      cs.emplace_back(th.get<double>(), std::move(factors));
    else
      throw ParseError("theta must be \"p/q\" or a number");
  }
  return BlaschkeDisc(std::move(cs), tol);
}

}  // namespace cfloer
