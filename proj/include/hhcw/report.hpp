#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "hhcw/schubert.hpp"
#include "hhcw/unitarity.hpp"

namespace hhcw {

struct UnitarityReport {
  std::string pair;
  std::string x_word;
  std::string w_word;
  int length = 0;
  bool is_hwhc = true;
  bool is_unitary = false;
  std::set<int> subdiagram;
  std::vector<Rational> lambda;
  std::vector<Rational> lambda_fundamental;
  Rational z;
  Rational b_last;
  std::string q_type;
  std::string r_type;
  std::optional<int> k_index;
  std::optional<Rational> gk_dim;
  bool rationally_smooth = false;
  bool smooth = false;
  std::string poincare;
  std::string diagram;

  friend bool operator==(const UnitarityReport&, const UnitarityReport&) = default;
};

inline UnitarityReport make_report(const PairPtr& pair, const WeylElement& x) {
  UnitarityReport r;
  PIdeal I = element_to_ideal(pair, x);
  const auto& rs = pair->rs();
  r.pair = pair->name();
  r.x_word = format_word(reduced_word(x));
  r.w_word = format_word(reduced_word(pair->w_c() * x));
  r.length = I.size();
  auto u = is_unitary(pair, x);
  r.is_unitary = u.unitary;
  if (u.unitary) r.subdiagram = u.subdiagram;
  Weight l = weight_of(*pair, x);
  r.lambda = l.coords();
  r.lambda_fundamental = rs.fundamental_coordinates(l);
  r.z = z_value(*pair, l);
  auto qr = qr_systems(pair, l);
  r.q_type = classify_subsystem(qr.Q).str();
  r.r_type = classify_subsystem(qr.R).str();
  r.b_last = last_reduction_point(pair, l);
  if (auto g = try_gk_and_av(*pair, l)) {
    r.k_index = g->k_index;
    r.gk_dim = g->gk_dim;
  }
  auto poly = poincare_polynomial(I);
  r.poincare = poly.str();
  r.rationally_smooth = poly.is_palindromic();
  r.smooth = is_smooth(I);
  r.diagram = render_diagram(I).text;
  return r;
}

// "ω1 - 18ω7"; zero prints as "0".
inline std::string format_fundamental(const std::vector<Rational>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Rational a = c[i];
    if (s.empty()) {
      if (a < 0) s += "-";
    } else {
      s += a < 0 ? " - " : " + ";
    }
    if (a < 0) a = -a;
    if (a != 1) s += to_string(a);
    s += "ω" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

inline nlohmann::json rationals_to_json(const std::vector<Rational>& v) {
  auto j = nlohmann::json::array();
  for (const auto& q : v) j.push_back(to_string(q));
  return j;
}

inline std::vector<Rational> rationals_from_json(const nlohmann::json& j) {
  std::vector<Rational> v;
  for (const auto& e : j) v.push_back(parse_rational(e.get<std::string>()));
  return v;
}

inline void to_json(nlohmann::json& j, const UnitarityReport& r) {
  j = nlohmann::json{
      {"pair", r.pair},
      {"x", r.x_word},
      {"w", r.w_word},
      {"length", r.length},
      {"is_hwhc", r.is_hwhc},
      {"is_unitary", r.is_unitary},
      {"subdiagram", r.subdiagram},
      {"lambda", rationals_to_json(r.lambda)},
      {"lambda_fundamental", rationals_to_json(r.lambda_fundamental)},
      {"lambda_text", format_fundamental(r.lambda_fundamental)},
      {"z", to_string(r.z)},
      {"b_last", to_string(r.b_last)},
      {"q_type", r.q_type},
      {"r_type", r.r_type},
      {"k_index", r.k_index ? nlohmann::json(*r.k_index) : nlohmann::json("n/a")},
      {"gk_dim", r.gk_dim ? nlohmann::json(to_string(*r.gk_dim)) : nlohmann::json("n/a")},
      {"rationally_smooth", r.rationally_smooth},
      {"smooth", r.smooth},
      {"poincare", r.poincare},
      {"diagram", r.diagram},
  };
}

inline void from_json(const nlohmann::json& j, UnitarityReport& r) {
  r.pair = j.at("pair").get<std::string>();
  r.x_word = j.at("x").get<std::string>();
  r.w_word = j.at("w").get<std::string>();
  r.length = j.at("length").get<int>();
  r.is_hwhc = j.at("is_hwhc").get<bool>();
  r.is_unitary = j.at("is_unitary").get<bool>();
  r.subdiagram = j.at("subdiagram").get<std::set<int>>();
  r.lambda = rationals_from_json(j.at("lambda"));
  r.lambda_fundamental = rationals_from_json(j.at("lambda_fundamental"));
  r.z = parse_rational(j.at("z").get<std::string>());
  r.b_last = parse_rational(j.at("b_last").get<std::string>());
  r.q_type = j.at("q_type").get<std::string>();
  r.r_type = j.at("r_type").get<std::string>();
  const auto& k = j.at("k_index");
  r.k_index = k.is_number() ? std::optional<int>(k.get<int>()) : std::nullopt;
  const auto& g = j.at("gk_dim").get<std::string>();
  r.gk_dim = g == "n/a" ? std::nullopt : std::optional<Rational>(parse_rational(g));
  r.rationally_smooth = j.at("rationally_smooth").get<bool>();
  r.smooth = j.at("smooth").get<bool>();
  r.poincare = j.at("poincare").get<std::string>();
  r.diagram = j.at("diagram").get<std::string>();
}

}  // namespace hhcw
