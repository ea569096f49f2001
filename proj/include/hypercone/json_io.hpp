#pragma once

#include <json.hpp>

#include "hypercone/extreal.hpp"

namespace hypercone {

using json = nlohmann::json;

// Scalar wire format: rationals as {"num": int, "den": int} (also accepted:
// bare integers and "a/b" strings), +inf as the string "inf".
inline json rat_to_json(const Rat& q) {
  if (denominator(q) == 1 && numerator(q) >= -(Int(1) << 62) && numerator(q) <= (Int(1) << 62))
    return json(numerator(q).convert_to<long long>());
  return json{{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

inline Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  }
  if (j.is_object()) {
    Int num = j.at("num").is_string() ? Int(j.at("num").get<std::string>())
                                      : Int(j.at("num").get<long long>());
    Int den = j.at("den").is_string() ? Int(j.at("den").get<std::string>())
                                      : Int(j.at("den").get<long long>());
    return Rat(num, den);
  }
  throw std::invalid_argument("cannot parse rational from JSON: " + j.dump());
}

inline json ext_to_json(const ExtNonneg& x) {
  if (x.is_inf()) return json("inf");
  return rat_to_json(x.value());
}

inline ExtNonneg ext_from_json(const json& j) {
  if (j.is_string() && (j.get<std::string>() == "inf" || j.get<std::string>() == "+inf"))
    return ExtNonneg::inf();
  return ExtNonneg(rat_from_json(j));
}

}  // namespace hypercone
