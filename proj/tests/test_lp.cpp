#include <doctest.h>

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "ccfix/lp.hpp"
#include "test_util.hpp"

using namespace ccfix;

TEST_CASE("one-variable maximization") {
  LinearProgram lp = LinearProgram::make(1, 1);
  lp.A(0, 0) = 1.0;
  lp.b(0) = 1.0;
  lp.sense[0] = RowSense::Le;
  lp.c(0) = 1.0;
  const LPResult res = solve_lp(lp);
  REQUIRE(res.status == LPStatus::Optimal);
  CHECK(res.x(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(res.objective == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("contradictory equalities are infeasible") {
  LinearProgram lp = LinearProgram::make(2, 1);
  lp.A(0, 0) = 1.0;
  lp.b(0) = 1.0;
  lp.A(1, 0) = 1.0;
  lp.b(1) = 2.0;
  const LPResult res = solve_lp(lp);
  CHECK(res.status == LPStatus::Infeasible);
  CHECK(res.objective > 0.1);  // certificate scale
}

TEST_CASE("unbounded ray is detected") {
  LinearProgram lp = LinearProgram::make(1, 1);
  lp.A(0, 0) = -1.0;
  lp.b(0) = 0.0;
  lp.sense[0] = RowSense::Le;  // -x <= 0, no upper bound
  lp.c(0) = 1.0;
  CHECK(solve_lp(lp).status == LPStatus::Unbounded);
}

TEST_CASE("hull membership of the frozen vertex set") {
  const std::vector<Eigen::VectorXd> vertices = {
      Eigen::Vector2d(4.0, -3.0), Eigen::Vector2d(0.5, 0.5),
      Eigen::Vector2d(-3.0, 4.0)};
  const Eigen::Vector2d point(0.5, 0.5);
  const HullResult res = hull_membership(point, vertices, 1e-9);
  REQUIRE(res.member);
  // the coefficients are a genuine certificate
  Eigen::Vector2d recombined = Eigen::Vector2d::Zero();
  for (int j = 0; j < 3; ++j) recombined += res.coefficients(j) * vertices[j];
  CHECK((recombined - point).norm() <= 1e-9);
  CHECK(res.coefficients.sum() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(res.coefficients.minCoeff() >= -1e-12);
}

TEST_CASE("hull membership basics") {
  const std::vector<Eigen::VectorXd> segment = {Eigen::Vector2d(0.0, 0.0),
                                                Eigen::Vector2d(2.0, 2.0)};
  SUBCASE("a vertex belongs") {
    const HullResult res = hull_membership(Eigen::Vector2d(2.0, 2.0), segment);
    CHECK(res.member);
    CHECK(res.coefficients(1) == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("the midpoint splits evenly") {
    const HullResult res = hull_membership(Eigen::Vector2d(1.0, 1.0), segment);
    REQUIRE(res.member);
    CHECK(res.coefficients(0) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(res.coefficients(1) == doctest::Approx(0.5).epsilon(1e-9));
  }
  SUBCASE("outside the bounding box") {
    CHECK(!hull_membership(Eigen::Vector2d(3.0, 0.0), segment).member);
  }
}

TEST_CASE("membership agrees with the direct barycentric solve") {
  std::mt19937_64 rng(51);
  int done = 0;
  while (done < 1000) {
    Eigen::Matrix2d edges;
    Eigen::Vector2d v0(testutil::urand(rng, -2, 2), testutil::urand(rng, -2, 2));
    Eigen::Vector2d v1(testutil::urand(rng, -2, 2), testutil::urand(rng, -2, 2));
    Eigen::Vector2d v2(testutil::urand(rng, -2, 2), testutil::urand(rng, -2, 2));
    edges.col(0) = v1 - v0;
    edges.col(1) = v2 - v0;
    if (std::abs(edges.determinant()) < 1e-2) continue;  // skip slivers
    const Eigen::Vector2d p(testutil::urand(rng, -3, 3),
                            testutil::urand(rng, -3, 3));
    const Eigen::Vector2d st = edges.inverse() * (p - v0);
    const double margin = 1e-7;  // keep clear of the decision boundary
    const double inside_score =
        std::min({st(0), st(1), 1.0 - st(0) - st(1)});
    if (std::abs(inside_score) < margin) continue;
    const bool inside = inside_score > 0.0;
    const HullResult res = hull_membership(p, {v0, v1, v2}, 1e-9);
    CHECK(res.member == inside);
    ++done;
  }
}

TEST_CASE("row scaling never changes the verdict") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    LinearProgram lp = LinearProgram::make(3, 4);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 4; ++j) lp.A(i, j) = testutil::urand(rng, -2, 2);
      lp.b(i) = testutil::urand(rng, -2, 2);
      const double pick = testutil::urand(rng, 0, 1);
      lp.sense[i] = pick < 0.4 ? RowSense::Le
                               : (pick < 0.8 ? RowSense::Ge : RowSense::Eq);
    }
    for (int j = 0; j < 4; ++j) lp.c(j) = testutil::urand(rng, -1, 1);
    lp.upper.setConstant(10.0);  // keep everything bounded

    LinearProgram scaled = lp;
    for (int i = 0; i < 3; ++i) {
      const double s = testutil::urand(rng, 1e-3, 1e3);
      scaled.A.row(i) *= s;
      scaled.b(i) *= s;
    }
    const LPResult a = solve_lp(lp);
    const LPResult b = solve_lp(scaled);
    CHECK(a.status == b.status);
    if (a.status == LPStatus::Optimal)
      CHECK(a.objective == doctest::Approx(b.objective).epsilon(1e-7));
  }
}

TEST_CASE("the classic cycling instance terminates under Bland") {
  // Beale's example: naive most-negative pivoting cycles forever.
  LinearProgram lp = LinearProgram::make(3, 4);
  lp.objective_sense = LPSense::Minimize;
  lp.c << -0.75, 150.0, -0.02, 6.0;
  lp.A.row(0) << 0.25, -60.0, -1.0 / 25.0, 9.0;
  lp.A.row(1) << 0.5, -90.0, -1.0 / 50.0, 3.0;
  lp.A.row(2) << 0.0, 0.0, 1.0, 0.0;
  lp.b << 0.0, 0.0, 1.0;
  lp.sense = {RowSense::Le, RowSense::Le, RowSense::Le};
  const LPResult res = solve_lp(lp);
  REQUIRE(res.status == LPStatus::Optimal);
  CHECK(res.objective == doctest::Approx(-0.05).epsilon(1e-9));
  CHECK(res.iterations < 100);
}
