#include "ccfix/json_io.hpp"

namespace ccfix {

using nlohmann::json;

json to_json(const Configuration& cfg) {
  json points = json::array();
  for (int i = 0; i < cfg.n(); ++i) {
    json row = json::array();
    for (int a = 0; a < cfg.d(); ++a) row.push_back(cfg.points()(i, a));
    points.push_back(std::move(row));
  }
  return json{{"n", cfg.n()}, {"d", cfg.d()}, {"points", std::move(points)}};
}

Configuration configuration_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("d") ||
      !j.contains("points"))
    throw ValidationError("configuration JSON needs n, d and points");
  const int n = j.at("n").get<int>();
  const int d = j.at("d").get<int>();
  const json& points = j.at("points");
  if (!points.is_array() || static_cast<int>(points.size()) != n)
    throw ValidationError("configuration JSON: points/n mismatch");
  Eigen::MatrixXd p(n, d);
  for (int i = 0; i < n; ++i) {
    const json& row = points.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != d)
      throw ValidationError("configuration JSON: row/d mismatch");
    for (int a = 0; a < d; ++a) p(i, a) = row.at(a).get<double>();
  }
  return Configuration(std::move(p));
}

json to_json(const MassVector& masses) {
  return json{{"m", std::vector<double>(masses.values().data(),
                                        masses.values().data() + masses.n())}};
}

MassVector mass_vector_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m"))
    throw ValidationError("mass JSON needs an m array");
  const std::vector<double> m = j.at("m").get<std::vector<double>>();
  return MassVector(Eigen::Map<const Eigen::VectorXd>(m.data(), m.size()));
}

json to_json(const GapPoint& x) {
  return json{{"x", std::vector<double>(x.x().data(),
                                        x.x().data() + x.x().size())}};
}

GapPoint gap_point_from_json(const json& j) {
  if (!j.is_object() || !j.contains("x"))
    throw ValidationError("gap-point JSON needs an x array");
  const std::vector<double> x = j.at("x").get<std::vector<double>>();
  return GapPoint(Eigen::Map<const Eigen::VectorXd>(x.data(), x.size()));
}

json to_json(const CentralConfigCertificate& cert) {
  return json{{"cfg", to_json(cert.cfg)},
              {"lambda", cert.lambda},
              {"residual", cert.residual}};
}

json to_json(const IndexReport& report) {
  return json{{"certificate", to_json(report.certificate)},
              {"mu", report.mu},
              {"fp_index", report.fp_index},
              {"eigenvalues", report.eigenvalues}};
}

json to_json(const MassSolution& sol) {
  json j{{"feasible", sol.feasible},
         {"system_solvable", sol.system_solvable},
         {"residual", sol.residual},
         {"lp_optimum", sol.lp_optimum}};
  if (sol.m.size() > 0) {
    j["m"] = std::vector<double>(sol.m.data(), sol.m.data() + sol.m.size());
    j["c"] = sol.c;
    j["min_mass"] = sol.min_mass;
  }
  return j;
}

}  // namespace ccfix
