#include <catch2/catch_amalgamated.hpp>

#include "qbetti/pencil.hpp"

#include <random>
#include <vector>

using qbetti::BinaryForm;
using qbetti::Classification;
using qbetti::ComplexSymMatrix;
using qbetti::GaussianRational;
using qbetti::Pencil;
using qbetti::Rational;

namespace {

GaussianRational g(int re, int im = 0) { return {Rational(re), Rational(im)}; }

ComplexSymMatrix diag(const std::vector<GaussianRational>& d) {
  ComplexSymMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.size(); ++i) m.set(i, i, d[i]);
  return m;
}

// q0 = z0*z2 - z1^2, q1 = z0*z3 - z1*z2 on CP^3.
Pencil skew_cubic_pencil() {
  ComplexSymMatrix q0(4), q1(4);
  q0.set(0, 2, GaussianRational(Rational(1, 2)));
  q0.set(1, 1, g(-1));
  q1.set(0, 3, GaussianRational(Rational(1, 2)));
  q1.set(1, 2, GaussianRational(Rational(-1, 2)));
  return {q0, q1};
}

// q0 = z0^2 - z1^2, q1 = 2*z2*(z0 + z1) on CP^2: rank two at every parameter.
Pencil constant_rank_pencil() {
  ComplexSymMatrix q0 = diag({g(1), g(-1), g(0)});
  ComplexSymMatrix q1(3);
  q1.set(0, 2, g(1));
  q1.set(1, 2, g(1));
  return {q0, q1};
}

Pencil random_pencil(std::mt19937_64& rng, int size) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> im(-1, 1);
  while (true) {
    ComplexSymMatrix q0(size), q1(size);
    for (int i = 0; i < size; ++i)
      for (int j = i; j < size; ++j) {
        q0.set(i, j, {Rational(num(rng)), Rational(im(rng))});
        q1.set(i, j, {Rational(num(rng)), Rational(im(rng))});
      }
    if (q0.is_zero() && q1.is_zero()) continue;
    Pencil p(q0, q1);
    if (!p.linearly_dependent()) return p;
  }
}

// Direct symbolic determinant: entries of a0*Q0 + a1*Q1 as degree-1 forms.
BinaryForm symbolic_det(const Pencil& p) {
  std::vector<std::vector<BinaryForm>> m(p.size(), std::vector<BinaryForm>(p.size()));
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) {
      GaussianRational c0 = p.q0().at(i, j), c1 = p.q1().at(i, j);
      if (c0.is_zero() && c1.is_zero())
        m[i][j] = BinaryForm::zero();
      else
        m[i][j] = BinaryForm({c1, c0});
    }
  return qbetti::bf_matrix_det(m);
}

}  // namespace

TEST_CASE("pencil construction guards") {
  ComplexSymMatrix z3(3), z4(4), q(3);
  q.set(0, 0, g(1));
  REQUIRE_THROWS_AS(Pencil(z3, z4), std::invalid_argument);
  REQUIRE_THROWS_AS(Pencil(z3, z3), std::invalid_argument);
  REQUIRE_NOTHROW(Pencil(q, z3));
}

TEST_CASE("linear dependence detection") {
  ComplexSymMatrix q(3);
  q.set(0, 1, g(2));
  q.set(2, 2, g(0, 1));
  ComplexSymMatrix scaled(3);
  scaled.set(0, 1, g(2) * g(2, 1));
  scaled.set(2, 2, g(0, 1) * g(2, 1));
  REQUIRE(Pencil(q, scaled).linearly_dependent());
  REQUIRE(Pencil(q, ComplexSymMatrix(3)).linearly_dependent());
  ComplexSymMatrix other(3);
  other.set(0, 0, g(1));
  REQUIRE_FALSE(Pencil(q, other).linearly_dependent());
  REQUIRE_THROWS_AS(qbetti::profile(Pencil(q, scaled)), std::invalid_argument);
}

TEST_CASE("determinant form of the skew-cubic pencil") {
  Pencil p = skew_cubic_pencil();
  BinaryForm det = qbetti::det_form(p);
  BinaryForm a1_4 = BinaryForm::a1().pow(4);
  REQUIRE(det == GaussianRational(Rational(1, 16)) * a1_4);
  REQUIRE(det.normalized() == a1_4);
  REQUIRE(qbetti::minor_gcd(p, 4) == a1_4);
  REQUIRE(qbetti::minor_gcd(p, 3) == BinaryForm::constant(1));
}

TEST_CASE("skew-cubic profile") {
  auto pr = qbetti::profile(skew_cubic_pencil());
  REQUIRE(pr.n == 3);
  REQUIRE(pr.mu == 4);
  REQUIRE(pr.nu == 3);
  REQUIRE(pr.sigma == std::map<int, int>{{4, 1}});
  REQUIRE(pr.sigma_at(3) == 0);
  REQUIRE_FALSE(pr.exists_odd_multiplicity);
  REQUIRE(pr.classification == Classification::Other);
  REQUIRE(qbetti::to_string(pr.classification) == "other");
}

TEST_CASE("constant-rank pencil profile") {
  Pencil p = constant_rank_pencil();
  REQUIRE(qbetti::det_form(p).is_zero());
  REQUIRE(qbetti::minor_gcd(p, 3).is_zero());
  auto pr = qbetti::profile(p);
  REQUIRE(pr.mu == 2);
  REQUIRE(pr.nu == 2);
  REQUIRE(pr.sigma.empty());
  REQUIRE(pr.det_form.is_zero());
  REQUIRE_FALSE(pr.exists_odd_multiplicity);
  REQUIRE(pr.classification == Classification::ConstantRank);
}

TEST_CASE("four-point pencil in the plane") {
  Pencil p(diag({g(1), g(-1), g(0)}), diag({g(1), g(0), g(-1)}));
  // det = (a0+a1)(-a0)(-a1) = a0^2*a1 + a0*a1^2
  REQUIRE(qbetti::det_form(p) == BinaryForm({g(0), g(1), g(1), g(0)}));
  auto pr = qbetti::profile(p);
  REQUIRE(pr.mu == 3);
  REQUIRE(pr.nu == 2);
  REQUIRE(pr.sigma_at(3) == 3);
  REQUIRE(pr.classification == Classification::CompleteIntersection);
}

TEST_CASE("complete-intersection profile in CP^3") {
  Pencil p(diag({g(1), g(1), g(1), g(1)}), diag({g(0), g(1), g(2), g(3)}));
  REQUIRE(qbetti::det_form(p) == BinaryForm({g(0), g(6), g(11), g(6), g(1)}));
  auto pr = qbetti::profile(p);
  REQUIRE(pr.mu == 4);
  REQUIRE(pr.nu == 3);
  REQUIRE(pr.sigma_at(4) == 4);
  REQUIRE(pr.exists_odd_multiplicity);
  REQUIRE(pr.classification == Classification::CompleteIntersection);
  REQUIRE(pr.sqfree_decomp.size() == 1);
  REQUIRE(pr.sqfree_decomp[0].second == 1);
  REQUIRE(pr.sqfree_decomp[0].first.degree() == 4);
}

TEST_CASE("interpolated determinant matches symbolic cofactor expansion") {
  REQUIRE(qbetti::det_form(skew_cubic_pencil()) == symbolic_det(skew_cubic_pencil()));
  REQUIRE(qbetti::det_form(constant_rank_pencil()) == symbolic_det(constant_rank_pencil()));
  std::mt19937_64 rng(90125);
  for (int trial = 0; trial < 25; ++trial) {
    Pencil p = random_pencil(rng, 2 + trial % 3);
    BinaryForm det = qbetti::det_form(p);
    REQUIRE(det == symbolic_det(p));
    if (!det.is_zero()) REQUIRE(det.degree() == p.size());
  }
}

TEST_CASE("property: minor gcds cut out the rank strata") {
  std::mt19937_64 rng(20260821);
  std::uniform_int_distribution<int> pt(-10, 10);
  for (int trial = 0; trial < 50; ++trial) {
    Pencil p = random_pencil(rng, 3 + trial % 3);
    auto pr = qbetti::profile(p);
    std::vector<BinaryForm> gcds(pr.mu + 1);
    for (int j = 1; j <= pr.mu; ++j) gcds[j] = qbetti::minor_gcd(p, j);
    std::vector<std::pair<GaussianRational, GaussianRational>> params;
    params.emplace_back(g(1), g(0));
    for (int k = 0; k < 20; ++k) params.emplace_back(g(pt(rng)), g(1));
    for (const auto& [a0, a1] : params) {
      int r = qbetti::rank_complex(p.evaluate(a0, a1));
      REQUIRE(r <= pr.mu);
      for (int j = 1; j <= pr.mu; ++j) {
        bool rank_at_least_j = r >= j;
        bool gcd_nonzero_here = !gcds[j].is_zero() && !gcds[j].eval(a0, a1).is_zero();
        REQUIRE(rank_at_least_j == gcd_nonzero_here);
      }
    }
  }
}

TEST_CASE("property: mu is the maximal sampled rank") {
  std::mt19937_64 rng(5551212);
  for (int trial = 0; trial < 25; ++trial) {
    Pencil p = random_pencil(rng, 3 + trial % 3);
    auto pr = qbetti::profile(p);
    int best = 0;
    // all rational det-form roots: the roots of its degree-one squarefree factors
    for (const auto& [f, mult] : pr.sqfree_decomp)
      if (f.degree() == 1)
        best = std::max(best, qbetti::rank_complex(p.evaluate(-f.coeff(0), f.coeff(1))));
    for (int k = 101; k <= 110; ++k)
      best = std::max(best, qbetti::rank_complex(p.evaluate(g(k), g(1))));
    REQUIRE(best == pr.mu);
  }
}

TEST_CASE("property: profile invariants hold on random pencils") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    Pencil p = random_pencil(rng, 3 + trial % 3);
    auto pr = qbetti::profile(p);
    REQUIRE(pr.nu <= pr.mu);
    REQUIRE(pr.mu <= pr.n + 1);
    REQUIRE(pr.det_form.is_zero() == (pr.mu < pr.n + 1));
    int prev = 0;
    for (const auto& [j, s] : pr.sigma) {  // std::map iterates keys in increasing order
      REQUIRE(j > pr.nu);
      REQUIRE(j <= pr.mu);
      REQUIRE(s >= prev);
      REQUIRE(s >= 1);
      prev = s;
    }
    REQUIRE(pr.sigma_at(pr.nu) == 0);
    if (pr.mu == pr.nu) REQUIRE(pr.classification == Classification::ConstantRank);
  }
}
