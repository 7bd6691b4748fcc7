#pragma once

#include <json.hpp>

#include "ccfix/cc_solver.hpp"
#include "ccfix/geometry.hpp"
#include "ccfix/inverse.hpp"
#include "ccfix/simplex_coords.hpp"

namespace ccfix {

// File/wire schemas:
//   Configuration  {"n": int, "d": int, "points": [[real, ...], ...]}
//   MassVector     {"m": [real, ...]}
//   GapPoint       {"x": [real, ...]}
//   Certificate    {"cfg": Configuration, "lambda": real, "residual": real}

nlohmann::json to_json(const Configuration& cfg);
Configuration configuration_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MassVector& masses);
MassVector mass_vector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GapPoint& x);
GapPoint gap_point_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CentralConfigCertificate& cert);
nlohmann::json to_json(const IndexReport& report);
nlohmann::json to_json(const MassSolution& sol);

}  // namespace ccfix
