#include "ccfix/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>

#include <json.hpp>

#include "ccfix/cc_solver.hpp"
#include "ccfix/inverse.hpp"
#include "ccfix/json_io.hpp"
#include "ccfix/sampling.hpp"

namespace ccfix::cli {

namespace {

using nlohmann::json;

// CSV numbers: '.' decimal, 17 significant digits, so doubles round-trip.
std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

void validate_common(const RunConfig& rc) {
  if (!(rc.alpha > 0.0)) throw ValidationError("alpha must be positive");
  if (!(rc.tol > 0.0 && rc.tol < 1e-4))
    throw ValidationError("tol must lie in (0, 1e-4)");
}

std::string resolve_format(const RunConfig& rc, const std::string& def,
                           std::initializer_list<const char*> allowed) {
  const std::string fmt = rc.format.empty() ? def : rc.format;
  for (const char* a : allowed)
    if (fmt == a) return fmt;
  throw ValidationError("unsupported output format '" + fmt +
                        "' for this command");
}

MassVector make_masses(const std::vector<double>& values) {
  if (values.size() < 3) throw ValidationError("need at least 3 masses");
  return MassVector(
      Eigen::Map<const Eigen::VectorXd>(values.data(), values.size()));
}

json report_to_json(const OrderingComponent& comp, const IndexReport& report) {
  json j = to_json(report);
  j["ordering"] = comp.one_based();
  return j;
}

double circ_diff(double a, double b, double period) {
  double d = std::fmod(a - b, period);
  if (d < -period / 2.0) d += period;
  if (d >= period / 2.0) d -= period;
  return d;
}

}  // namespace

int cmd_solve(const std::vector<double>& masses_in,
              const std::optional<std::vector<int>>& ordering_one_based,
              const RunConfig& rc, std::ostream& os) {
  validate_common(rc);
  const std::string fmt = resolve_format(rc, "json", {"json", "csv"});
  const MassVector masses = make_masses(masses_in);

  std::vector<OrderingComponent> components;
  if (ordering_one_based) {
    components.push_back(OrderingComponent::from_one_based(*ordering_one_based));
    if (components.back().n() != masses.n())
      throw ValidationError("ordering length does not match mass count");
  } else {
    components = projective_components(masses.n());
  }

  std::vector<std::pair<OrderingComponent, IndexReport>> reports;
  for (const OrderingComponent& comp : components) {
    const CentralConfigCertificate cert =
        solve_component(comp, masses, rc.alpha, rc.tol);
    reports.emplace_back(comp, morse_index(cert, masses, rc.alpha));
  }

  if (fmt == "json") {
    json out = json::array();
    for (const auto& [comp, report] : reports)
      out.push_back(report_to_json(comp, report));
    os << out.dump(2) << '\n';
  } else {
    os << "ordering,lambda,residual,mu,fp_index\n";
    for (const auto& [comp, report] : reports)
      os << comp.to_string() << ',' << fmt17(report.certificate.lambda) << ','
         << fmt17(report.certificate.residual) << ',' << report.mu << ','
         << report.fp_index << '\n';
  }
  return 0;
}

int cmd_enumerate(const std::vector<double>& masses, const RunConfig& rc,
                  std::ostream& os) {
  return cmd_solve(masses, std::nullopt, rc, os);
}

int cmd_inverse(const InverseInput& in, const RunConfig& rc, std::ostream& os) {
  validate_common(rc);
  const std::string fmt = resolve_format(rc, "json", {"json", "csv"});

  int sources = 0;
  sources += !in.gaps.empty();
  sources += !in.positions.empty();
  sources += !in.input_path.empty();
  if (sources != 1)
    throw ValidationError("give exactly one of --gaps, --positions, --input");

  const GapPoint x = [&] {
    if (!in.gaps.empty())
      return GapPoint::normalized(Eigen::Map<const Eigen::VectorXd>(
          in.gaps.data(), in.gaps.size()));
    if (!in.positions.empty())
      return to_gaps(Eigen::Map<const Eigen::VectorXd>(in.positions.data(),
                                                       in.positions.size()));
    std::ifstream f(in.input_path);
    if (!f) throw ValidationError("cannot open " + in.input_path);
    json j;
    f >> j;
    return gap_point_from_json(j);
  }();
  if (!x.interior() || x.min_gap() < kCollisionEps)
    throw CollisionError("input configuration lies on a collision wall");

  const MassSolution sol = solve_masses(x, rc.alpha);
  const HullResult hull = psi_contains(x, rc.alpha);

  if (fmt == "json") {
    json membership{{"member", hull.member}, {"violation", hull.violation}};
    membership["coefficients"] = std::vector<double>(
        hull.coefficients.data(),
        hull.coefficients.data() + hull.coefficients.size());
    json out{{"alpha", rc.alpha},
             {"gaps", to_json(x)},
             {"mass_solution", to_json(sol)},
             {"psi_membership", std::move(membership)}};
    os << out.dump(2) << '\n';
  } else {
    os << "feasible,member,c,residual,min_mass,lp_optimum";
    for (int j = 0; j < x.n(); ++j) os << ",m" << j + 1;
    os << '\n';
    os << (sol.feasible ? 1 : 0) << ',' << (hull.member ? 1 : 0) << ','
       << fmt17(sol.c) << ',' << fmt17(sol.residual) << ','
       << fmt17(sol.min_mass) << ',' << fmt17(sol.lp_optimum);
    for (int j = 0; j < x.n(); ++j)
      os << ',' << fmt17(sol.m.size() > 0 ? sol.m(j) : 0.0);
    os << '\n';
  }
  return 0;
}

int cmd_psi(const std::vector<double>& gaps, const RunConfig& rc,
            std::ostream& os) {
  validate_common(rc);
  resolve_format(rc, "csv", {"csv"});
  if (gaps.empty()) throw ValidationError("--gaps is required");
  const GapPoint x = GapPoint::normalized(
      Eigen::Map<const Eigen::VectorXd>(gaps.data(), gaps.size()));
  const PsiImage image = psi_vertices(x, rc.alpha);

  os << 'j';
  for (int i = 0; i + 1 < x.n(); ++i) os << ",x" << i + 1;
  os << '\n';
  for (int j = 0; j < x.n(); ++j) {
    os << j + 1;
    for (int i = 0; i + 1 < x.n(); ++i)
      os << ',' << fmt17(image.vertices[j](i));
    os << '\n';
  }
  return 0;
}

int cmd_fig1(const std::vector<double>& masses_in, int samples,
             const RunConfig& rc, std::ostream& os) {
  validate_common(rc);
  resolve_format(rc, "csv", {"csv"});
  if (samples < 8) throw ValidationError("need at least 8 samples");
  const MassVector masses = make_masses(masses_in);
  if (masses.n() != 3)
    throw ValidationError("the circle tabulation is the three-body picture");

  const CircleChartN3 chart(masses);
  const auto walls = chart.wall_angles();
  std::vector<double> wall_angles_2pi;
  for (const auto& w : walls) {
    wall_angles_2pi.push_back(w.theta);
    wall_angles_2pi.push_back(w.theta + std::numbers::pi);
  }

  const double h = 2.0 * std::numbers::pi / samples;
  os << "theta,f,fbar,component_id,is_wall\n";
  for (int k = 0; k < samples; ++k) {
    const double theta = k * h;
    bool is_wall = false;
    for (double w : wall_angles_2pi) {
      const double d = circ_diff(w, theta, 2.0 * std::numbers::pi);
      if (d >= -h / 2.0 && d < h / 2.0) is_wall = true;
    }
    const Eigen::VectorXd v = chart.point(theta);
    const auto ordering_of = [](const Eigen::VectorXd& w) {
      std::vector<int> order = {0, 1, 2};
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return w(a) > w(b); });
      return OrderingComponent(order);
    };
    double f = std::numeric_limits<double>::quiet_NaN();
    double fbar = std::numeric_limits<double>::quiet_NaN();
    std::string component = "wall";
    try {
      const Configuration cfg = Configuration::collinear(v);
      f = chart.angle_mod_2pi(f_map(cfg, masses, rc.alpha).col(0));
      fbar = chart.angle_mod_pi(f_bar(ProjectivePoint(v, masses), rc.alpha));
      component = ordering_of(v).to_string();
    } catch (const CollisionError&) {
      // exact wall hit: the unquotiented map has a genuine gap, the
      // quotient map extends by its wall limit
      double best = std::numeric_limits<double>::infinity();
      int wi = 0, wj = 1;
      for (const auto& w : walls) {
        const double d = std::abs(circ_diff(theta, w.theta, std::numbers::pi));
        if (d < best) {
          best = d;
          wi = w.i;
          wj = w.j;
        }
      }
      const OrderingComponent side = ordering_of(chart.point(theta + 0.01 * h));
      fbar = chart.angle_mod_pi(f_bar_wall_limit(wi, wj, side, masses));
    }
    os << fmt17(theta) << ',' << fmt17(f) << ',' << fmt17(fbar) << ','
       << component << ',' << (is_wall ? 1 : 0) << '\n';
  }
  return 0;
}

int cmd_fig2(int samples, const RunConfig& rc, std::ostream& os) {
  validate_common(rc);
  resolve_format(rc, "csv", {"csv"});
  if (samples < 8) throw ValidationError("need at least 8 samples");

  const double end = std::sqrt(0.5);
  const double h = 2.0 * end / samples;
  const double eps = 1e-12;
  os << "t,f1,f2,f3,member_low,member_high\n";
  for (int k = 0; k < samples; ++k) {
    const double t = -end + (k + 0.5) * h;
    const FMapsN3 f = f_maps_n3(t, rc.alpha);
    const bool member_low = t >= f.f3 - eps && t <= f.f2 + eps;
    const bool member_high = t >= f.f2 - eps && t <= f.f1 + eps;
    os << fmt17(t) << ',' << fmt17(f.f1) << ',' << fmt17(f.f2) << ','
       << fmt17(f.f3) << ',' << (member_low ? 1 : 0) << ','
       << (member_high ? 1 : 0) << '\n';
  }
  return 0;
}

int cmd_survey(int n, const std::vector<double>& alphas, int count,
               const RunConfig& rc, std::ostream& os) {
  validate_common(rc);
  resolve_format(rc, "json", {"json"});
  if (n < 3 || n > 6) throw ValidationError("survey supports n in 3..6");
  if (count < 1) throw ValidationError("count must be positive");
  if (alphas.empty()) throw ValidationError("need at least one alpha");
  for (double a : alphas)
    if (!(a > 0.0)) throw ValidationError("alpha must be positive");

  std::mt19937_64 rng(rc.seed);
  json results = json::array();
  for (double alpha : alphas) {
    int feasible = 0;
    int disagreements = 0;
    double max_mass_residual = 0.0;
    double max_hull_violation = 0.0;
    for (int i = 0; i < count; ++i) {
      const GapPoint x(sample_simplex_interior(rng, n - 1, kSurveyFloor));
      const HullResult hull = psi_contains(x, alpha);
      const MassSolution nonneg = solve_masses(x, alpha, 0.0);
      const MassSolution strict = solve_masses(x, alpha);
      if (hull.member != nonneg.feasible) ++disagreements;
      if (strict.feasible) ++feasible;
      if (nonneg.system_solvable)
        max_mass_residual = std::max(max_mass_residual, nonneg.residual);
      if (hull.member)
        max_hull_violation = std::max(max_hull_violation, hull.violation);
    }
    results.push_back(json{{"alpha", alpha},
                           {"count", count},
                           {"feasible", feasible},
                           {"feasibility_rate",
                            static_cast<double>(feasible) / count},
                           {"disagreements", disagreements},
                           {"max_mass_residual", max_mass_residual},
                           {"max_hull_violation", max_hull_violation}});
  }
  const json out{{"n", n},
                 {"seed", rc.seed},
                 {"count", count},
                 {"interior_floor", kSurveyFloor},
                 {"results", std::move(results)}};
  os << out.dump(2) << '\n';
  return 0;
}

}  // namespace ccfix::cli
