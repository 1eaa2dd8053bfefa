#pragma once

// JSON encodings shared by the command line tool and the Python bindings.

#include <json.hpp>

#include "kuga/cone_lab.hpp"
#include "kuga/cusp_tables.hpp"
#include "kuga/cyclic_rep.hpp"
#include "kuga/reid_tai.hpp"
#include "kuga/symplectic.hpp"

namespace kuga {

// {"components":[{"d":6,"mult":1},...],"two_g":4}
nlohmann::json rep_to_json(const RationalRep& rep);
// Throws RepError on an invalid representation, nlohmann::json::exception on
// a malformed document, std::invalid_argument if two_g disagrees.
RationalRep rep_from_json(const nlohmann::json& j);

// {"g":2,"n":1,"rep":"V6+V1^2","v_angles":["0","1/6"],"rt":"2/3",
//  "canonical":false,"quasi_reflection":false}
nlohmann::json case_to_json(const ClassifiedCase& c);

nlohmann::json scan_to_json(const ScanReport& report);

// Row-major array of "p/q" strings.
nlohmann::json matrix_to_json(const RationalMatrix& m);

nlohmann::json cusp_fact_to_json(const CuspFormFact& fact);

}  // namespace kuga
