#include "cohiggs/report.hpp"

#include <sstream>

namespace cohiggs {

Json to_json(const CriterionReport& report) {
  Json obstruction = Json::array();
  for (const auto& v : report.violating_roots)
    obstruction.push_back({{"factor", v.factor}, {"simple_root", v.simple_root}, {"value", v.value}});
  return Json{{"admits_stable", report.admits_stable},
              {"obstructed_semistable", report.obstructed_semistable},
              {"obstruction", obstruction},
              {"adjoint_degrees", report.adjoint_degrees.degrees()}};
}

std::string a_vector_string(const HNType& m) {
  std::string out;
  for (const auto& a : m.simple_values)
    for (int v : a) {
      if (!out.empty()) out += ',';
      out += std::to_string(v);
    }
  return out;
}

Json to_json(const StratumRecord& record) {
  Json a = Json::array();
  for (const auto& factor : record.hn.simple_values)
    for (int v : factor) a.push_back(v);
  return Json{{"a", a},
              {"central_degrees", record.hn.central_degrees},
              {"dim_VM", record.dim_cohiggs_space},
              {"dim_aut", record.dim_automorphisms},
              {"dim_stratum", record.dim_stratum},
              {"generic", record.is_generic}};
}

std::string strata_csv(const std::vector<StratumRecord>& records) {
  std::ostringstream out;
  out << "a_vector,dim_VM,dim_aut,dim_stratum,generic\n";
  for (const auto& r : records)
    out << '"' << a_vector_string(r.hn) << "\"," << r.dim_cohiggs_space << ',' << r.dim_automorphisms << ','
        << r.dim_stratum << ',' << (r.is_generic ? "true" : "false") << '\n';
  return out.str();
}

Json to_json(const OracleVerdict& verdict) {
  Json witnesses = Json::array();
  if (verdict.witness) {
    const auto& w = *verdict.witness;
    Json sections = Json::array();
    for (const auto& s : w.sections) sections.push_back(to_json(s));
    witnesses.push_back({{"rank", w.rank},
                         {"degree", w.degree},
                         {"via_dual", w.via_dual},
                         {"line_degree", w.line_degree},
                         {"sections", sections}});
  }
  return Json{{"verdict", verdict.passes ? "PASSES" : "FAILS"},
              {"mode", to_string(verdict.mode)},
              {"field", "F" + std::to_string(verdict.characteristic)},
              {"over_this_field_only", verdict.passes},
              {"subbundles_checked", verdict.subbundles_checked},
              {"witnesses", witnesses}};
}

}  // namespace cohiggs
