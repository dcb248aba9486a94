#include <catch2/catch_amalgamated.hpp>

#include "qbetti/oracle.hpp"
#include "qbetti/run.hpp"

#include <random>

using qbetti::ComplexSymMatrix;
using qbetti::GaussianRational;
using qbetti::Pencil;
using qbetti::PointCount;
using qbetti::Rational;
using qbetti::SolveStatus;

namespace {

GaussianRational g(int re, int im = 0) { return {Rational(re), Rational(im)}; }

ComplexSymMatrix quad(const std::string& s, int n = 2) { return qbetti::parse_quadric(s, n); }

ComplexSymMatrix diag3(int a, int b, int c) {
  ComplexSymMatrix m(3);
  m.set(0, 0, g(a));
  m.set(1, 1, g(b));
  m.set(2, 2, g(c));
  return m;
}

}  // namespace

TEST_CASE("four points, certified") {
  PointCount pc = qbetti::point_count_cp2(quad("z0^2 - z1^2"), quad("z0^2 - z2^2"));
  REQUIRE(!pc.infinite);
  REQUIRE(pc.value == 4);
  REQUIRE(pc.certified);
}

TEST_CASE("a point union a line is infinite") {
  PointCount pc = qbetti::point_count_cp2(quad("z0^2 - z1^2"), quad("2*z0*z2 + 2*z1*z2"));
  REQUIRE(pc.infinite);
  REQUIRE(pc.certified);
}

TEST_CASE("three points, certified") {
  // z0^2 = z1^2 and 2 z0 (z1 + z2) = 0 meet in [0,0,1], [1,1,-1], [1,-1,1]
  ComplexSymMatrix q0 = quad("z0^2 - z1^2");
  ComplexSymMatrix q1 = quad("2*z0*z1 + 2*z0*z2");
  PointCount pc = qbetti::point_count_cp2(q0, q1);
  REQUIRE(!pc.infinite);
  REQUIRE(pc.value == 3);
  REQUIRE(pc.certified);

  // and the spectral pipeline agrees
  auto pp = qbetti::profile(Pencil(q0, q1));
  auto rep = qbetti::solve(pp);
  REQUIRE(rep.status == SolveStatus::Resolved);
  REQUIRE(rep.betti_C == std::vector<int>{3, 0, 0, 0, 0});
  REQUIRE(qbetti::cross_check(rep, pp, pc));
}

TEST_CASE("identical conics share a component") {
  ComplexSymMatrix q = quad("z0*z1 + z2^2");
  PointCount pc = qbetti::point_count_cp2(q, q);
  REQUIRE(pc.infinite);
  REQUIRE(pc.certified);
}

TEST_CASE("the oracle is restricted to the plane") {
  ComplexSymMatrix big = qbetti::parse_quadric("z0*z2 - z1^2", 3);
  REQUIRE_THROWS_WITH(qbetti::point_count_cp2(big, big),
                      Catch::Matchers::ContainsSubstring("projective plane"));
}

TEST_CASE("cross-check preconditions") {
  ComplexSymMatrix q0 = diag3(1, -1, 0), q1 = diag3(1, 0, -1);
  auto pp = qbetti::profile(Pencil(q0, q1));
  auto rep = qbetti::solve(pp);
  PointCount pc = qbetti::point_count_cp2(q0, q1);
  REQUIRE(qbetti::cross_check(rep, pp, pc));  // 4 points, 3 singular elements

  PointCount uncertified{false, 4, false};
  REQUIRE_THROWS_AS(qbetti::cross_check(rep, pp, uncertified), std::invalid_argument);
  PointCount infinite{true, -1, true};
  REQUIRE_THROWS_AS(qbetti::cross_check(rep, pp, infinite), std::invalid_argument);
}

TEST_CASE("certified counts are frame-independent") {
  ComplexSymMatrix q0 = quad("z0^2 - z1^2");
  for (const auto& q1 : {quad("z0^2 - z2^2"), quad("2*z0*z1 + 2*z0*z2")}) {
    PointCount a = qbetti::point_count_cp2(q0, q1, 111);
    PointCount b = qbetti::point_count_cp2(q0, q1, 999);
    REQUIRE(a.certified);
    REQUIRE(b.certified);
    REQUIRE(a.infinite == b.infinite);
    REQUIRE(a.value == b.value);
  }
}

TEST_CASE("random diagonal pencils: b0 equals the point count") {
  std::mt19937_64 rng(20260821);
  std::uniform_int_distribution<int> entry(-3, 3);
  int finite_checked = 0;
  for (int trial = 0; trial < 200 && finite_checked < 30; ++trial) {
    ComplexSymMatrix q0 = diag3(entry(rng), entry(rng), entry(rng));
    ComplexSymMatrix q1 = diag3(entry(rng), entry(rng), entry(rng));
    if (qbetti::detail::matrix_is_zero(q0) || qbetti::detail::matrix_is_zero(q1)) continue;
    Pencil pencil(q0, q1);
    if (pencil.linearly_dependent()) continue;
    auto pp = qbetti::profile(pencil);
    auto rep = qbetti::solve(pp);
    PointCount pc = qbetti::point_count_cp2(q0, q1, 7000 + trial);
    REQUIRE(pc.certified);
    if (pc.infinite || rep.status != SolveStatus::Resolved) continue;
    REQUIRE(rep.betti_C == std::vector<int>{pc.value, 0, 0, 0, 0});
    REQUIRE(qbetti::cross_check(rep, pp, pc));
    ++finite_checked;
  }
  REQUIRE(finite_checked >= 30);
}
