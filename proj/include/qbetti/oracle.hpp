#pragma once

// Independent verification for the projective plane: count the points of
// C = {q0 = q1 = 0} in CP^2 by eliminating one variable with a resultant,
// in a random rational coordinate frame, and certify the count by agreement
// across two independent frames.  Exact throughout; the only randomness is
// the seeded choice of frames.

#include "qbetti/pencil.hpp"
#include "qbetti/spectral.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace qbetti {

struct PointCount {
  bool infinite = false;  // the intersection contains a curve
  int value = -1;         // number of points when finite
  bool certified = false; // two independent frames agreed
};

namespace detail {

using Frame = DenseMatrix<GaussianRational>;

// Q' = T^t Q T, the Gram matrix of q after the substitution z -> T z.
inline ComplexSymMatrix congruence(const ComplexSymMatrix& q, const Frame& t) {
  const int n = q.size();
  ComplexSymMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      GaussianRational sum(0);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) sum += t[k][i] * q.at(k, l) * t[l][j];
      out.set(i, j, sum);
    }
  return out;
}

// Small random integer frame, invertible, and generic for the pair in the
// sense that both transformed conics keep a nonzero z0^2 coefficient (the
// resultant below needs full-degree leading coefficients).
inline Frame random_frame(std::mt19937_64& rng, const ComplexSymMatrix& q0,
                          const ComplexSymMatrix& q1) {
  // The frame is bad when its first column (the center of the projection
  // eliminating z0) lies on a line through two intersection points; a wide
  // entry range keeps that rare.
  std::uniform_int_distribution<int> entry(-20, 20);
  for (int tries = 0; tries < 200; ++tries) {
    Frame t(3, std::vector<GaussianRational>(3));
    for (auto& row : t)
      for (auto& v : row) v = GaussianRational(entry(rng));
    if (bareiss_det(t).is_zero()) continue;
    if (congruence(q0, t).at(0, 0).is_zero()) continue;
    if (congruence(q1, t).at(0, 0).is_zero()) continue;
    return t;
  }
  throw std::runtime_error("failed to draw a usable coordinate frame");
}

// The conic as a quadratic in z0 with binary-form coefficients in (z1, z2):
// q = A z0^2 + B z0 + C, deg A = 0, deg B = 1, deg C = 2.
struct ConicInZ0 {
  BinaryForm a, b, c;
};

inline ConicInZ0 split_in_z0(const ComplexSymMatrix& q) {
  ConicInZ0 out;
  out.a = BinaryForm::constant(q.at(0, 0));
  // index k = coefficient of z1^k z2^(d-k)
  out.b = BinaryForm({GaussianRational(2) * q.at(0, 2), GaussianRational(2) * q.at(0, 1)});
  out.c = BinaryForm({q.at(2, 2), GaussianRational(2) * q.at(1, 2), q.at(1, 1)});
  return out;
}

// Sylvester resultant of two quadratics in z0: a degree-4 binary form in
// (z1, z2) whose roots are the projections of the intersection points.
inline BinaryForm resultant_z0(const ComplexSymMatrix& q0, const ComplexSymMatrix& q1) {
  ConicInZ0 p = split_in_z0(q0), q = split_in_z0(q1);
  const BinaryForm z = BinaryForm::zero();
  return bf_matrix_det({{p.a, p.b, p.c, z},
                        {z, p.a, p.b, p.c},
                        {q.a, q.b, q.c, z},
                        {z, q.a, q.b, q.c}});
}

}  // namespace detail

inline PointCount point_count_cp2(const ComplexSymMatrix& q0, const ComplexSymMatrix& q1,
                                  std::uint64_t seed = 2026) {
  if (q0.size() != 3 || q1.size() != 3)
    throw std::invalid_argument("point count requires the projective plane");
  std::mt19937_64 rng(seed);
  // A bad frame can only merge projections, never split them, so every
  // observed count is a lower bound on the true one; certify agreement only
  // at the running maximum.
  int max_seen = 0;
  for (int attempt = 0; attempt < 8; ++attempt) {
    detail::Frame t1 = detail::random_frame(rng, q0, q1);
    detail::Frame t2 = detail::random_frame(rng, q0, q1);
    BinaryForm r1 = detail::resultant_z0(detail::congruence(q0, t1), detail::congruence(q1, t1));
    BinaryForm r2 = detail::resultant_z0(detail::congruence(q0, t2), detail::congruence(q1, t2));
    if (r1.is_zero() && r2.is_zero()) return {true, -1, true};
    if (r1.is_zero() || r2.is_zero()) continue;  // degenerate frame; redraw
    int c1 = bf_distinct_root_count(r1);
    int c2 = bf_distinct_root_count(r2);
    max_seen = std::max({max_seen, c1, c2});
    if (c1 == c2 && c1 == max_seen) return {false, c1, true};
  }
  return {false, max_seen, false};
}

// Agreement between the spectral answer and the certified point count, plus
// the plane criterion: four points exactly when the determinant form has
// three distinct roots.
inline bool cross_check(const BettiReport& rep, const PencilProfile& pp, const PointCount& pc) {
  if (rep.n != 2) throw std::invalid_argument("cross-check requires the projective plane");
  if (rep.status != SolveStatus::Resolved)
    throw std::invalid_argument("cross-check requires a resolved report");
  if (!pc.certified || pc.infinite)
    throw std::invalid_argument("cross-check requires a certified finite count");
  bool ok = rep.betti_C == std::vector<int>{pc.value, 0, 0, 0, 0};
  int sigma3 = pp.mu == 3 ? pp.sigma_at(3) : 0;
  return ok && ((pc.value == 4) == (sigma3 == 3));
}

}  // namespace qbetti
