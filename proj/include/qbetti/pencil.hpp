#pragma once

// Rank stratification of a pencil span(q0, q1) of quadratic forms on C^{n+1}.
//
// For a pencil P(a0, a1) = a0*Q0 + a1*Q1 of Gram matrices, the locus
// Sigma_j = { [a] in CP^1 : rank P(a) <= j-1 } is the common zero set of the
// j x j minors of P, i.e. the zero set of their gcd g_j.  The profile records
// the generic rank mu, the minimal rank nu, the distinct-point counts
// sigma_j = |Sigma_j| for nu < j <= mu, the determinant form with its
// squarefree structure, and a coarse classification of the pencil.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qbetti/binary_form.hpp"
#include "qbetti/symmetric.hpp"

namespace qbetti {

namespace detail {

// Newton divided-difference interpolation: the unique polynomial of degree
// <= d through the d+1 points (xs[i], ys[i]) with pairwise distinct xs.
inline Poly interpolate(const std::vector<GaussianRational>& xs,
                        const std::vector<GaussianRational>& ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw std::invalid_argument("interpolation needs matching nonempty samples");
  const int d = static_cast<int>(xs.size()) - 1;
  std::vector<GaussianRational> coef(ys);
  for (int k = 1; k <= d; ++k)
    for (int i = d; i >= k; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - k]);
  Poly p;
  for (int i = d; i >= 0; --i) {
    p = poly_add(poly_mul(p, Poly{-xs[i], GaussianRational(1)}), Poly{coef[i]});
  }
  poly_trim(p);
  return p;
}

}  // namespace detail

enum class Classification { CompleteIntersection, ConstantRank, GenericDeterminant, Other };

inline std::string to_string(Classification c) {
  switch (c) {
    case Classification::CompleteIntersection: return "complete-intersection";
    case Classification::ConstantRank: return "constant-rank";
    case Classification::GenericDeterminant: return "generic-determinant";
    case Classification::Other: return "other";
  }
  throw std::logic_error("unknown classification");
}

// A two-dimensional space of quadratic forms, stored by a chosen basis.
// Degenerate spans (proportional or vanishing generators) are still storable
// so that callers can detect them and reroute, but the stratification below
// requires an honest pencil.
class Pencil {
 public:
  Pencil(ComplexSymMatrix q0, ComplexSymMatrix q1) : q0_(std::move(q0)), q1_(std::move(q1)) {
    if (q0_.size() != q1_.size())
      throw std::invalid_argument("pencil generators have different sizes");
    if (q0_.is_zero() && q1_.is_zero()) throw std::invalid_argument("pencil of zero forms");
  }

  int size() const { return q0_.size(); }
  int ambient_dim() const { return size() - 1; }  // n for forms on C^{n+1}

  const ComplexSymMatrix& q0() const { return q0_; }
  const ComplexSymMatrix& q1() const { return q1_; }

  // True when the span is at most one-dimensional: one generator vanishes or
  // q1 = c * q0.
  bool linearly_dependent() const {
    if (q0_.is_zero() || q1_.is_zero()) return true;
    GaussianRational c;
    bool have_c = false;
    for (int i = 0; i < size(); ++i)
      for (int j = i; j < size(); ++j) {
        if (!have_c && !q0_.at(i, j).is_zero()) {
          c = q1_.at(i, j) / q0_.at(i, j);
          have_c = true;
        }
      }
    for (int i = 0; i < size(); ++i)
      for (int j = i; j < size(); ++j)
        if (q1_.at(i, j) != c * q0_.at(i, j)) return false;
    return true;
  }

  ComplexSymMatrix evaluate(const GaussianRational& a0, const GaussianRational& a1) const {
    ComplexSymMatrix r(size());
    for (int i = 0; i < size(); ++i)
      for (int j = i; j < size(); ++j) r.set(i, j, a0 * q0_.at(i, j) + a1 * q1_.at(i, j));
    return r;
  }

 private:
  ComplexSymMatrix q0_, q1_;
};

namespace detail {

// The j x j minor of P on rows `rows` and columns `cols`, recovered as a
// binary form of homogeneous degree j: interpolate t -> det of the submatrix
// of t*Q0 + Q1 at j+1 sample points, then restore the a1-degree deficit.
inline BinaryForm pencil_minor(const std::vector<DenseMatrix<GaussianRational>>& samples,
                               const std::vector<GaussianRational>& xs,
                               const std::vector<int>& rows, const std::vector<int>& cols) {
  const int j = static_cast<int>(rows.size());
  std::vector<GaussianRational> ys;
  ys.reserve(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    DenseMatrix<GaussianRational> sub(j, std::vector<GaussianRational>(j));
    for (int r = 0; r < j; ++r)
      for (int c = 0; c < j; ++c) sub[r][c] = samples[k][rows[r]][cols[c]];
    ys.push_back(bareiss_det(std::move(sub)));
  }
  Poly p = interpolate(xs, ys);
  if (poly_is_zero(p)) return BinaryForm::zero();
  BinaryForm f = BinaryForm::rehomogenize(p);
  return f * BinaryForm::a1().pow(j - f.degree());
}

// All size-j index subsets of {0, ..., m-1} in lexicographic order.
inline std::vector<std::vector<int>> index_subsets(int m, int j) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(j);
  for (int i = 0; i < j; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = j - 1;
    while (i >= 0 && cur[i] == m - j + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int t = i + 1; t < j; ++t) cur[t] = cur[t - 1] + 1;
  }
  return out;
}

}  // namespace detail

// The determinant of P(a0, a1) as a binary form of degree size(), including
// its scalar factor (zero form when the determinant vanishes identically).
inline BinaryForm det_form(const Pencil& p) {
  const int m = p.size();
  std::vector<GaussianRational> xs, ys;
  for (int k = 0; k <= m; ++k) {
    xs.push_back(GaussianRational(k));
    ys.push_back(det_complex(p.evaluate(GaussianRational(k), GaussianRational(1))));
  }
  detail::Poly d = detail::interpolate(xs, ys);
  if (detail::poly_is_zero(d)) return BinaryForm::zero();
  BinaryForm f = BinaryForm::rehomogenize(d);
  return f * BinaryForm::a1().pow(m - f.degree());
}

// Normalized gcd g_j of all j x j minors of the pencil; the zero form when
// every j x j minor vanishes identically (rank < j on all of CP^1).
// Enumeration stops as soon as the running gcd drops to a nonzero constant.
inline BinaryForm minor_gcd(const Pencil& p, int j) {
  const int m = p.size();
  if (j < 1 || j > m) throw std::invalid_argument("minor order out of range");
  std::vector<GaussianRational> xs;
  std::vector<detail::DenseMatrix<GaussianRational>> samples;
  for (int k = 0; k <= j; ++k) {
    xs.push_back(GaussianRational(k));
    samples.push_back(p.evaluate(GaussianRational(k), GaussianRational(1)).dense());
  }
  const auto subsets = detail::index_subsets(m, j);
  BinaryForm g = BinaryForm::zero();
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = a; b < subsets.size(); ++b) {  // P symmetric: minor(R,C) = minor(C,R)
      BinaryForm mf = detail::pencil_minor(samples, xs, subsets[a], subsets[b]);
      if (mf.is_zero()) continue;
      g = g.is_zero() ? mf.normalized() : bf_gcd(g, mf);
      if (g.degree() == 0) return g;
    }
  return g;
}

struct PencilProfile {
  int n = 0;   // ambient projective dimension; Gram matrices are (n+1) x (n+1)
  int mu = 0;  // generic (maximal) rank over CP^1
  int nu = 0;  // minimal rank over CP^1
  BinaryForm det_form;                                     // zero form iff mu < n+1
  std::map<int, int> sigma;                                // j -> sigma_j for nu < j <= mu
  std::vector<std::pair<BinaryForm, int>> sqfree_decomp;   // of det_form when nonzero
  bool exists_odd_multiplicity = false;                    // some det-form factor has odd exponent
  Classification classification = Classification::Other;

  // sigma_j for 0 <= j <= mu (zero at and below nu).
  int sigma_at(int j) const {
    if (j < 0 || j > mu) throw std::out_of_range("sigma index out of range");
    auto it = sigma.find(j);
    return it == sigma.end() ? 0 : it->second;
  }
};

inline PencilProfile profile(const Pencil& p) {
  if (p.linearly_dependent())
    throw std::invalid_argument("profile requires linearly independent generators");
  const int m = p.size();
  PencilProfile out;
  out.n = p.ambient_dim();

  // Generic rank: rank < mu only at the roots of g_mu, at most m of them, so
  // m+1 distinct sample points always include one of full generic rank.
  for (int k = 0; k <= m; ++k)
    out.mu = std::max(out.mu, rank_complex(p.evaluate(GaussianRational(k), GaussianRational(1))));

  out.det_form = det_form(p);

  // Descend the gcd ladder from mu until sigma_j = 0; monotonicity of the
  // strata Sigma_j makes that j the minimal rank nu.
  out.nu = 0;
  for (int j = out.mu; j >= 1; --j) {
    BinaryForm g = (j == m && !out.det_form.is_zero()) ? out.det_form : minor_gcd(p, j);
    int s = g.is_zero() ? 0 : bf_distinct_root_count(g);
    if (s == 0) {
      out.nu = j;
      break;
    }
    out.sigma[j] = s;
  }

  if (!out.det_form.is_zero()) {
    out.sqfree_decomp = bf_squarefree_decomposition(out.det_form);
    for (const auto& [f, mult] : out.sqfree_decomp)
      if (mult % 2 == 1) out.exists_odd_multiplicity = true;
  }

  if (out.mu == out.n + 1 && out.sigma_at(out.mu) == out.n + 1 && out.nu == out.n)
    out.classification = Classification::CompleteIntersection;
  else if (out.nu == out.mu)
    out.classification = Classification::ConstantRank;
  else if (out.mu == out.n + 1 && out.sigma_at(out.mu) == out.n + 1)
    out.classification = Classification::GenericDeterminant;  // shadowed by the first test
  else
    out.classification = Classification::Other;
  return out;
}

}  // namespace qbetti
