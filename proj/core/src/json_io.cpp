#include "etaforge/json_io.hpp"

namespace etaforge {

using nlohmann::json;

json poly_to_json(const SparsePoly& p) {
  json terms = json::array();
  for (const auto& [key, c] : p.terms()) {
    json t;
    t["c"] = rat_to_string(c);
    json xe = json::array(), ye = json::array();
    for (int i = 1; i <= p.xvars(); ++i) xe.push_back(static_cast<int>(key[i]));
    for (int j = 1; j <= p.yvars(); ++j) ye.push_back(static_cast<int>(key[p.xvars() + j]));
    t["x"] = std::move(xe);
    t["y"] = std::move(ye);
    terms.push_back(std::move(t));
  }
  return json{{"m", p.xvars()}, {"ky", p.yvars()}, {"terms", std::move(terms)}};
}

SparsePoly poly_from_json(const json& j) {
  if (!j.contains("m") || !j.contains("ky") || !j.contains("terms"))
    fail(ErrorCode::ParseError, "polynomial JSON needs m, ky and terms");
  SparsePoly p(j["m"].get<int>(), j["ky"].get<int>());
  for (const auto& t : j["terms"]) {
    std::vector<int> xe = t["x"].get<std::vector<int>>();
    std::vector<int> ye = t["y"].get<std::vector<int>>();
    p.add_term(xe, ye, rat_from_string(t["c"].get<std::string>()));
  }
  return p;
}

json expansion_to_json(const OperatorExpansion& e) {
  json out = json::array();
  for (const auto& [comp, c] : e.terms)
    out.push_back(json{{"composition", comp}, {"coefficient", c.get_str()}});
  return out;
}

json pieri_steps_to_json(const std::vector<PieriStep>& steps) {
  json out = json::array();
  for (const auto& s : steps)
    out.push_back(json{{"mu", partition_literal(s.target)},
                       {"N", s.n_comp},
                       {"M", s.exponent}});
  return out;
}

json tableau_to_json(const TypedTableau& t) {
  json chain = json::array();
  for (const auto& la : t.chain) chain.push_back(typed_partition_literal(la));
  return json{{"chain", std::move(chain)},
              {"n", t.n_stat()},
              {"grid", render_tableau(t)}};
}

json bitableau_to_json(const TypedBitableau& u) {
  json j = tableau_to_json(u.tableau);
  j["marked"] = u.marked;
  j["grid"] = render_bitableau(u);
  return j;
}

}  // namespace etaforge
