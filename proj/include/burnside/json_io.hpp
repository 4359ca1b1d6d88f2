// JSON forms of the library values. Rationals are always "p/q" strings;
// floats appear only in parallel "approx" fields.
#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "burnside/chain.hpp"
#include "burnside/eigenbasis.hpp"
#include "burnside/rational.hpp"
#include "burnside/tableau.hpp"
#include "burnside/tensor.hpp"

namespace burnside {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& r) { return to_string(r); }

// {"n": 3, "coeffs": {"011": "1/2", ...}}, keys in string order.
inline json to_json(const TensorVector& v) {
  std::vector<std::pair<std::string, std::string>> terms;
  for (const auto& [m, c] : v.coeffs()) terms.emplace_back(mask_string(v.n(), m), to_string(c));
  std::sort(terms.begin(), terms.end());
  json coeffs = json::object();
  for (auto& [k, c] : terms) coeffs[k] = c;
  return json{{"n", v.n()}, {"coeffs", coeffs}};
}

inline TensorVector tensor_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  TensorVector::Map m;
  for (const auto& [key, val] : j.at("coeffs").items()) {
    Subset s = Subset::parse(key, true);
    if (s.n() != n) throw std::invalid_argument("coefficient key length differs from n");
    m[s.mask()] += parse_rational(val.get<std::string>());
  }
  return TensorVector(n, std::move(m));
}

// {"n": 5, "m": 2, "second_row": [3, 5]}
inline json to_json(const Tableau& q) {
  return json{{"n", q.n()}, {"m", q.m()}, {"second_row", q.second_row()}};
}

inline Tableau tableau_from_json(const json& j) {
  Tableau q(j.at("n").get<int>(), j.at("second_row").get<std::vector<int>>());
  if (j.contains("m") && j.at("m").get<int>() != q.m()) throw std::invalid_argument("m disagrees with second_row");
  return q;
}

// Factors listed in application order (the first entry acts first).
inline json to_json(const TauWord& w) {
  json factors = json::array();
  for (const auto& f : w) factors.push_back(json{{"j", f.j}, {"shift", to_string(f.shift)}});
  return json{{"order", "application"}, {"factors", factors}};
}

inline json to_json(const SpectrumEntry& e, bool with_vector) {
  json j{{"m", e.m()},
         {"l", e.ell()},
         {"tableau", to_json(e.tableau())},
         {"eigenvalue", to_string(e.eigenvalue())},
         {"sq_norm", to_string(e.sq_norm())}};
  if (with_vector) j["vector"] = to_json(e.vector());
  return j;
}

inline json to_json(const std::vector<SpectrumCluster>& spectrum) {
  json out = json::array();
  for (const auto& c : spectrum) {
    json j;
    j["eigenvalue"] = c.exact ? json(to_string(*c.exact)) : json(nullptr);
    j["approx"] = c.value;
    j["multiplicity"] = c.multiplicity;
    out.push_back(j);
  }
  return out;
}

}  // namespace burnside
