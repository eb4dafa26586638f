#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kschur/ktableaux.hpp"
#include "kschur/quantum.hpp"
#include "kschur/symfunc.hpp"

namespace kschur {

/// `basis: { [2,1]: 1, [3]: -1 }`; k-bases are tagged `kschur(k)`.
std::string format_sympoly(const SymPoly& f);
/// Inverse of format_sympoly. The degree of an empty expression is taken
/// from `empty_degree`.
SymPoly parse_sympoly(std::string_view text, int empty_degree = 0);

nlohmann::json sympoly_to_json(const SymPoly& f);
SymPoly sympoly_from_json(const nlohmann::json& j);

nlohmann::json gw_to_json(const GWExpansion& g);
GWExpansion gw_from_json(const nlohmann::json& j);

nlohmann::json fusion_to_json(const FusionTerms& f);
FusionTerms fusion_from_json(const nlohmann::json& j);

nlohmann::json tableaux_to_json(const std::vector<KTableau>& ts);
std::vector<KTableau> tableaux_from_json(const nlohmann::json& j);

/// Tensor as a list of {left, right, coeff} records.
nlohmann::json tensor_to_json(const Tensor& t);

}  // namespace kschur
