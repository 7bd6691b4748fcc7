#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ccfix/cc_solver.hpp"
#include "ccfix/simplex_coords.hpp"
#include "test_util.hpp"

using namespace ccfix;

namespace {
const MassVector kOnes3 = MassVector::ones(3);

Eigen::MatrixXd equilateral_on_sphere() {
  Eigen::MatrixXd p(3, 2);
  const double r = 1.0 / std::sqrt(3.0);
  for (int k = 0; k < 3; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / 3.0;
    p(k, 0) = r * std::cos(phi);
    p(k, 1) = r * std::sin(phi);
  }
  return p;
}
}  // namespace

TEST_CASE("component solve reproduces the symmetric Euler configuration") {
  const CentralConfigCertificate cert =
      solve_component(OrderingComponent::identity(3), kOnes3, 1.0);
  CHECK(cert.residual < 1e-10);
  CHECK(cert.lambda < 0.0);

  const GapPoint x = to_gaps(cert.cfg);
  CHECK(std::abs(x.x()(0) - x.x()(1)) <= 1e-10);

  // rescaled to span 2 the multiplier is the hand value -1.25
  const Eigen::VectorXd q = cert.cfg.axis();
  const double span = q(0) - q(2);
  const Configuration rescaled =
      Configuration::collinear(q * (2.0 / span));
  CHECK(lambda_of(rescaled, kOnes3, 1.0) ==
        doctest::Approx(-1.25).epsilon(1e-12));
}

TEST_CASE("reversed ordering yields the antipodal certificate") {
  const CentralConfigCertificate a =
      solve_component(OrderingComponent::identity(3), kOnes3, 1.0);
  const CentralConfigCertificate b =
      solve_component(OrderingComponent({2, 1, 0}), kOnes3, 1.0);
  const ProjectivePoint pa(a.cfg.axis(), kOnes3);
  const ProjectivePoint pb(b.cfg.axis(), kOnes3);
  CHECK(projective_distance(pa, pb) <= 1e-9);
  CHECK((a.cfg.axis() + b.cfg.axis()).norm() <= 1e-9);
}

TEST_CASE("equal four-body masses give palindromic gaps") {
  const CentralConfigCertificate cert = solve_component(
      OrderingComponent::identity(4), MassVector::ones(4), 1.0);
  const GapPoint x = to_gaps(cert.cfg);
  CHECK(std::abs(x.x()(0) - x.x()(2)) <= 1e-9);
}

TEST_CASE("enumeration counts the projective ordering classes") {
  SUBCASE("three bodies, random masses") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 3; ++trial) {
      const MassVector m = testutil::random_masses(rng, 3);
      const EnumerationResult res = enumerate_collinear(m, 1.0);
      CHECK(res.failures.empty());
      CHECK(res.solutions.size() == 3);
      for (const CollinearSolution& sol : res.solutions)
        CHECK(sol.certificate.residual < 1e-10);
    }
  }
  SUBCASE("four equal masses") {
    const EnumerationResult res = enumerate_collinear(MassVector::ones(4), 1.0);
    CHECK(res.failures.empty());
    CHECK(res.solutions.size() == 12);
  }
  SUBCASE("five equal masses") {
    const EnumerationResult res = enumerate_collinear(MassVector::ones(5), 1.0);
    CHECK(res.failures.empty());
    CHECK(res.solutions.size() == 60);
  }
  SUBCASE("factorial guard") {
    CHECK_THROWS_AS(enumerate_collinear(MassVector::ones(8), 1.0),
                    ValidationError);
  }
}

TEST_CASE("second variation at the symmetric Euler point") {
  const CentralConfigCertificate cert =
      solve_component(OrderingComponent::identity(3), kOnes3, 1.0, 1e-12);
  const IndexReport report = morse_index(cert, kOnes3, 1.0);
  CHECK(report.mu == 0);
  CHECK(report.fp_index == 1);
  REQUIRE(report.eigenvalues.size() == 1);
  // hand value: 3 * 2^{5/2} + 2.5 * 2^{1/2} = 14.5 sqrt(2)
  CHECK(report.eigenvalues[0] ==
        doctest::Approx(14.5 * std::sqrt(2.0)).epsilon(1e-9));

  // oracle: second difference of the potential along the unit-speed chart
  const CircleChartN3 chart(kOnes3);
  const ProjectivePoint p(cert.cfg.axis(), kOnes3);
  const double theta = chart.angle_mod_pi(p);
  const double h = 1e-4;
  const auto u_at = [&](double th) {
    return potential(Configuration::collinear(chart.point(th)), kOnes3, 1.0);
  };
  const double fd2 =
      (u_at(theta + h) - 2.0 * u_at(theta) + u_at(theta - h)) / (h * h);
  CHECK(report.eigenvalues[0] == doctest::Approx(fd2).epsilon(1e-4));
}

TEST_CASE("index data across enumerations") {
  std::mt19937_64 rng(72);
  int fp_sum = 0;
  const EnumerationResult res = enumerate_collinear(kOnes3, 1.0);
  for (const CollinearSolution& sol : res.solutions) {
    const IndexReport report = morse_index(sol.certificate, kOnes3, 1.0);
    CHECK(report.fp_index == (report.mu % 2 == 0 ? 1 : -1));
    int negatives = 0;
    for (double e : report.eigenvalues)
      if (e < 0.0) ++negatives;
    CHECK(report.mu == negatives);
    fp_sum += report.fp_index;
  }
  CHECK(fp_sum == 3);

  // nondegenerate indices are stable under small mass perturbations
  const MassVector perturbed(Eigen::Vector3d(1.0, 1.0, 1.0 + 1e-3));
  for (const CollinearSolution& sol : enumerate_collinear(perturbed, 1.0).solutions) {
    const IndexReport report = morse_index(sol.certificate, perturbed, 1.0);
    CHECK(report.mu == 0);
    CHECK(report.fp_index == 1);
  }

  // …and for random masses the reports stay consistent
  for (int trial = 0; trial < 2; ++trial) {
    const MassVector m = testutil::random_masses(rng, 4);
    for (const CollinearSolution& sol : enumerate_collinear(m, 1.0).solutions) {
      const IndexReport report = morse_index(sol.certificate, m, 1.0);
      CHECK(report.fp_index == (report.mu % 2 == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("certificates satisfy the defining equation") {
  std::mt19937_64 rng(73);
  for (int n : {3, 4}) {
    const MassVector m = testutil::random_masses(rng, n);
    const double tol = 1e-11;
    for (const CollinearSolution& sol :
         enumerate_collinear(m, 1.0, tol).solutions) {
      const Configuration& cfg = sol.certificate.cfg;
      const Eigen::MatrixXd grad = euclidean_gradient(cfg, m, 1.0);
      const Eigen::MatrixXd lhs =
          sol.certificate.lambda *
          (cfg.points().array().colwise() * m.values().array()).matrix();
      CHECK(mass_norm(lhs - grad, m) < 10.0 * tol);
    }
  }
}

TEST_CASE("common mass scaling leaves the shape unchanged") {
  std::mt19937_64 rng(74);
  const MassVector m = testutil::random_masses(rng, 3);
  const MassVector scaled(m.values() * 3.7);
  const CentralConfigCertificate a =
      solve_component(OrderingComponent::identity(3), m, 1.0);
  const CentralConfigCertificate b =
      solve_component(OrderingComponent::identity(3), scaled, 1.0);
  CHECK((to_gaps(a.cfg).x() - to_gaps(b.cfg).x()).lpNorm<Eigen::Infinity>() <=
        1e-8);
}

TEST_CASE("fixed-point iteration in the plane: equilateral triangle") {
  // substitution oracle: the exact equilateral satisfies the equation
  const Configuration exact(equilateral_on_sphere());
  const Eigen::MatrixXd grad = euclidean_gradient(exact, kOnes3, 1.0);
  const double lambda = lambda_of(exact, kOnes3, 1.0);
  CHECK((lambda * exact.points() - grad).norm() <= 1e-12);

  Eigen::MatrixXd start = equilateral_on_sphere();
  std::mt19937_64 rng(75);
  for (int i = 0; i < start.rows(); ++i)
    for (int a = 0; a < 2; ++a) start(i, a) += testutil::urand(rng, -0.05, 0.05);
  const CentralConfigCertificate cert = solve_fixed_point_iterative(
      Configuration(start), kOnes3, 1.0, 1e-10, 5000);
  CHECK(cert.residual < 1e-10);
  const Eigen::MatrixXd& p = cert.cfg.points();
  const double d01 = (p.row(0) - p.row(1)).norm();
  const double d02 = (p.row(0) - p.row(2)).norm();
  const double d12 = (p.row(1) - p.row(2)).norm();
  CHECK(std::abs(d01 - d02) <= 1e-8 * d01);
  CHECK(std::abs(d01 - d12) <= 1e-8 * d01);
}

TEST_CASE("fixed-point iteration returns immediately at a fixed point") {
  const Configuration start =
      normalize_to_sphere(Configuration::collinear(Eigen::Vector3d(1, 0, -1)),
                          kOnes3);
  const CentralConfigCertificate cert =
      solve_fixed_point_iterative(start, kOnes3, 1.0, 1e-10, 100);
  CHECK((cert.cfg.points() - start.points()).norm() <= 1e-14);
  CHECK(cert.residual <= 1e-12);
}

TEST_CASE("fixed-point iteration agrees with the component solver") {
  const CentralConfigCertificate newton =
      solve_component(OrderingComponent::identity(3), kOnes3, 1.0);
  const Configuration start = normalize_to_sphere(
      Configuration::collinear(OrderingComponent::identity(3).equally_spaced()),
      kOnes3);
  const CentralConfigCertificate iterated =
      solve_fixed_point_iterative(start, kOnes3, 1.0, 1e-10, 5000);
  const ProjectivePoint a(newton.cfg.axis(), kOnes3);
  const ProjectivePoint b(iterated.cfg.axis(), kOnes3);
  CHECK(projective_distance(a, b) <= 1e-8);
}

TEST_CASE("iteration budget exhausted reports the best residual") {
  const Configuration start = normalize_to_sphere(
      Configuration::collinear(Eigen::Vector3d(2.0, 0.3, -1.1)), kOnes3);
  try {
    solve_fixed_point_iterative(start, kOnes3, 1.0, 1e-12, 1);
    FAIL("expected non-convergence");
  } catch (const ConvergenceError& e) {
    CHECK(e.best_residual() > 0.0);
    CHECK(e.best_residual() < 1.0);
  }
}
