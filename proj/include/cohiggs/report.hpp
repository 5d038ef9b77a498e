#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cohiggs/cohiggs_matrix.hpp"
#include "cohiggs/criterion.hpp"
#include "cohiggs/strata.hpp"

namespace cohiggs {

using Json = nlohmann::ordered_json;

Json to_json(const CriterionReport& report);
Json to_json(const StratumRecord& record);
Json to_json(const OracleVerdict& verdict);

/// Concatenated simple values, e.g. "1,0,2".
std::string a_vector_string(const HNType& m);

/// Header plus one row per stratum: a_vector,dim_VM,dim_aut,dim_stratum,generic.
std::string strata_csv(const std::vector<StratumRecord>& records);

template <class F>
Json to_json(const HomogPoly<F>& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) {
    if constexpr (F::is_finite)
      coeffs.push_back(c);
    else
      coeffs.push_back(p.field().to_string(c));
  }
  return Json{{"degree", p.degree()}, {"coefficients", coeffs}};
}

template <class F>
Json to_json(const CoHiggsMatrix<F>& phi) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < phi.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < phi.rank(); ++j) row.push_back(to_json(phi.entry(i, j)));
    rows.push_back(row);
  }
  return Json{{"splitting", phi.splitting().degrees()}, {"field", phi.field().name()}, {"entries", rows}};
}

}  // namespace cohiggs
