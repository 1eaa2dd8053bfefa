#include "kuga/report.hpp"

namespace kuga {

using nlohmann::json;

json rep_to_json(const RationalRep& rep) {
  json components = json::array();
  for (const auto& c : rep.components()) components.push_back({{"d", c.d}, {"mult", c.mult}});
  return {{"components", components}, {"two_g", rep.two_g()}};
}

RationalRep rep_from_json(const json& j) {
  std::vector<CyclotomicComponent> components;
  for (const auto& c : j.at("components")) {
    components.push_back({c.at("d").get<std::int64_t>(), c.at("mult").get<std::int64_t>()});
  }
  auto rep = RationalRep::make(std::move(components));
  if (j.contains("two_g") && j.at("two_g").get<std::int64_t>() != rep.two_g()) {
    throw std::invalid_argument("two_g does not match the components");
  }
  return rep;
}

json case_to_json(const ClassifiedCase& c) {
  return {{"g", c.g},
          {"n", c.n},
          {"rep", c.rep.label()},
          {"v_angles", angle_strings(c.splitting.v_angles)},
          {"rt", c.rt.get_str()},
          {"canonical", c.is_canonical_cert},
          {"quasi_reflection", c.is_quasi_reflection}};
}

json scan_to_json(const ScanReport& report) {
  json exceptions = json::array(), quasi = json::array(), pairs = json::array();
  for (const auto& c : report.exceptions) exceptions.push_back(case_to_json(c));
  for (const auto& c : report.quasi_reflections) quasi.push_back(case_to_json(c));
  for (const auto& [g, n] : report.exceptional_pairs()) pairs.push_back({g, n});
  return {{"g_range", {report.g_min, report.g_max}},
          {"n_range", {report.n_min, report.n_max}},
          {"cases_examined", report.cases_examined},
          {"exceptional_pairs", pairs},
          {"exceptions", exceptions},
          {"quasi_reflections", quasi}};
}

json matrix_to_json(const RationalMatrix& m) { return m.to_strings(); }

json cusp_fact_to_json(const CuspFormFact& f) {
  return {{"g", f.g},
          {"min_cusp_weight", f.min_cusp_weight},
          {"dim_at_min", f.dim_at_min},
          {"dim_is_lower_bound", f.dim_is_lower_bound},
          {"min_n_for_nonneg_kodaira", f.min_n_for_nonneg_kodaira},
          {"kodaira_positive", f.kodaira_positive},
          {"source", f.source}};
}

}  // namespace kuga
