#pragma once

#include <json.hpp>

#include "etaforge/raising_ops.hpp"
#include "etaforge/sparse_poly.hpp"
#include "etaforge/strips_pieri.hpp"
#include "etaforge/tableaux.hpp"

namespace etaforge {

nlohmann::json poly_to_json(const SparsePoly& p);
SparsePoly poly_from_json(const nlohmann::json& j);

nlohmann::json expansion_to_json(const OperatorExpansion& e);
nlohmann::json pieri_steps_to_json(const std::vector<PieriStep>& steps);
nlohmann::json tableau_to_json(const TypedTableau& t);
nlohmann::json bitableau_to_json(const TypedBitableau& u);

}  // namespace etaforge
