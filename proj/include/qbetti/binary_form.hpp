#pragma once

// Homogeneous binary forms over Q(i): parameter-space polynomials in
// (a0, a1), with exact GCD, Yun squarefree decomposition, and root counting
// on the projective line.  The root [1:0] is carried by the a1-power that
// dehomogenization would otherwise lose, so it is always handled explicitly.

#include "qbetti/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qbetti {

namespace detail {

// Dense univariate polynomials over Q(i), ascending coefficients, trimmed;
// an empty vector is the zero polynomial.
using Poly = std::vector<GaussianRational>;

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline bool poly_is_zero(const Poly& p) { return p.empty(); }

inline int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (k < a.size()) r[k] += a[k];
    if (k < b.size()) r[k] += b[k];
  }
  poly_trim(r);
  return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (k < a.size()) r[k] += a[k];
    if (k < b.size()) r[k] -= b[k];
  }
  poly_trim(r);
  return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (poly_is_zero(a) || poly_is_zero(b)) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t k = 0; k < b.size(); ++k) r[j + k] += a[j] * b[k];
  poly_trim(r);
  return r;
}

inline Poly poly_scale(Poly p, const GaussianRational& c) {
  if (c.is_zero()) return {};
  for (auto& x : p) x *= c;
  return p;
}

// Euclidean division over the field Q(i).
inline std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
  if (poly_is_zero(den)) throw std::domain_error("polynomial division by zero");
  if (num.size() < den.size()) return {{}, std::move(num)};
  Poly quot(num.size() - den.size() + 1);
  const GaussianRational& lead = den.back();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    GaussianRational c = num[k + den.size() - 1] / lead;
    quot[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
  }
  poly_trim(num);
  poly_trim(quot);
  return {std::move(quot), std::move(num)};
}

inline Poly poly_div_exact(const Poly& num, const Poly& den) {
  auto [q, r] = poly_divmod(num, den);
  if (!poly_is_zero(r)) throw std::logic_error("inexact polynomial division");
  return q;
}

inline Poly poly_monic(Poly p) {
  if (poly_is_zero(p)) return p;
  GaussianRational inv = GaussianRational(1) / p.back();
  for (auto& c : p) c *= inv;
  return p;
}

// Monic GCD by the Euclidean algorithm; gcd(0, 0) is the zero polynomial.
inline Poly poly_gcd(Poly a, Poly b) {
  while (!poly_is_zero(b)) {
    Poly r = poly_divmod(std::move(a), b).second;
    a = std::move(b);
    b = poly_monic(std::move(r));
  }
  return poly_monic(std::move(a));
}

inline Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * GaussianRational(static_cast<int>(k));
  return d;
}

// Yun's squarefree decomposition in characteristic zero: returns the list of
// (squarefree factor, multiplicity) with p = lc * prod f_i^i, multiplicities
// strictly increasing, factors monic and pairwise coprime.  Constant input
// yields an empty list.
inline std::vector<std::pair<Poly, int>> poly_yun(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (poly_deg(p) < 1) return out;
  Poly f = poly_monic(p);
  Poly fp = poly_derivative(f);
  Poly g = poly_gcd(f, fp);
  if (poly_deg(g) == 0) {
    out.emplace_back(std::move(f), 1);
    return out;
  }
  Poly c = poly_div_exact(f, g);
  Poly d = poly_sub(poly_div_exact(fp, g), poly_derivative(c));
  for (int i = 1; poly_deg(c) > 0; ++i) {
    Poly a = poly_gcd(c, d);
    if (poly_deg(a) > 0) out.emplace_back(a, i);
    c = poly_div_exact(c, a);
    d = poly_sub(poly_div_exact(d, a), poly_derivative(c));
  }
  return out;
}

}  // namespace detail

// Homogeneous form f(a0, a1) = sum_k coeff[k] * a0^k * a1^(d-k).  The degree
// is fixed by the coefficient count; only the all-zero coefficient vector
// collapses to the distinguished zero form, which carries no degree.
class BinaryForm {
public:
  BinaryForm() = default;  // zero form

  explicit BinaryForm(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) {
    bool all_zero = true;
    for (const auto& x : c_)
      if (!x.is_zero()) {
        all_zero = false;
        break;
      }
    if (all_zero) c_.clear();
  }

  static BinaryForm zero() { return BinaryForm(); }

  static BinaryForm constant(const GaussianRational& v) { return BinaryForm({v}); }

  // c * a0^k * a1^(d-k)
  static BinaryForm monomial(const GaussianRational& c, int k, int d) {
    if (k < 0 || d < 0 || k > d) throw std::invalid_argument("bad monomial exponents");
    std::vector<GaussianRational> v(d + 1);
    v[k] = c;
    return BinaryForm(std::move(v));
  }

  // The linear form a1 (root [1:0]).
  static BinaryForm a1() { return monomial(1, 0, 1); }

  bool is_zero() const { return c_.empty(); }

  int degree() const {
    if (is_zero()) throw std::logic_error("degree of the zero form");
    return static_cast<int>(c_.size()) - 1;
  }

  // Coefficient of a0^k (zero beyond the stored range).
  const GaussianRational& coeff(int k) const {
    static const GaussianRational kZero{};
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[k];
  }

  const std::vector<GaussianRational>& coeffs() const { return c_; }

  GaussianRational eval(const GaussianRational& a0, const GaussianRational& a1) const {
    if (is_zero()) return {};
    GaussianRational result;
    GaussianRational pow0(1);
    std::vector<GaussianRational> pow1(c_.size());
    pow1[c_.size() - 1] = GaussianRational(1);
    for (int k = static_cast<int>(c_.size()) - 2; k >= 0; --k) pow1[k] = pow1[k + 1] * a1;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      result += c_[k] * pow0 * pow1[k];
      pow0 *= a0;
    }
    return result;
  }

  // Largest v with a1^v dividing the form.
  int alpha1_valuation() const {
    if (is_zero()) throw std::logic_error("valuation of the zero form");
    int top = degree();
    while (c_[top].is_zero()) --top;  // c_ is not all zero
    return degree() - top;
  }

  // f(t, 1), with the a1 power of the form folded to 1.
  detail::Poly dehomogenize() const {
    detail::Poly p(c_.begin(), c_.end());
    detail::poly_trim(p);
    return p;
  }

  // Form of degree deg(p) from a univariate polynomial with nonzero lead.
  static BinaryForm rehomogenize(const detail::Poly& p) {
    if (detail::poly_is_zero(p)) return zero();
    return BinaryForm(std::vector<GaussianRational>(p.begin(), p.end()));
  }

  // Leading (highest a0-power) nonzero coefficient scaled to 1.
  BinaryForm normalized() const {
    if (is_zero()) return *this;
    detail::Poly p(c_.begin(), c_.end());
    detail::poly_trim(p);
    GaussianRational inv = GaussianRational(1) / p.back();
    std::vector<GaussianRational> v(c_);
    for (auto& x : v) x *= inv;
    return BinaryForm(std::move(v));
  }

  BinaryForm operator-() const {
    std::vector<GaussianRational> v(c_);
    for (auto& x : v) x = -x;
    return BinaryForm(std::move(v));
  }

  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() != b.degree())
      throw std::invalid_argument("adding binary forms of different degrees");
    std::vector<GaussianRational> v(a.c_);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += b.c_[k];
    return BinaryForm(std::move(v));
  }

  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + (-b); }

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<GaussianRational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t j = 0; j < a.c_.size(); ++j)
      for (std::size_t k = 0; k < b.c_.size(); ++k) v[j + k] += a.c_[j] * b.c_[k];
    return BinaryForm(std::move(v));
  }

  friend BinaryForm operator*(const GaussianRational& s, const BinaryForm& f) {
    if (s.is_zero() || f.is_zero()) return zero();
    std::vector<GaussianRational> v(f.c_);
    for (auto& x : v) x *= s;
    return BinaryForm(std::move(v));
  }

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.c_ == b.c_; }
  friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

  BinaryForm pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative form power");
    BinaryForm r = constant(1);
    for (int k = 0; k < e; ++k) r = r * (*this);
    return r;
  }

  std::string to_string(const std::string& v0 = "a0", const std::string& v1 = "a1") const;

private:
  std::vector<GaussianRational> c_;
};

inline std::string BinaryForm::to_string(const std::string& v0, const std::string& v1) const {
  if (is_zero()) return "0";
  const int d = degree();
  std::string s;
  for (int k = d; k >= 0; --k) {
    const GaussianRational& c = c_[k];
    if (c.is_zero()) continue;
    std::string cs = qbetti::to_string(c);
    bool mixed = cs.find('+', 1) != std::string::npos || cs.find('-', 1) != std::string::npos;
    if (mixed) cs = "(" + cs + ")";
    std::string mono;
    if (k > 0) mono += v0 + (k > 1 ? "^" + std::to_string(k) : "");
    if (d - k > 0) {
      if (!mono.empty()) mono += "*";
      mono += v1 + (d - k > 1 ? "^" + std::to_string(d - k) : "");
    }
    std::string term;
    if (mono.empty()) {
      term = cs;
    } else if (c == GaussianRational(1)) {
      term = mono;
    } else if (c == GaussianRational(-1)) {
      term = "-" + mono;
    } else {
      term = cs + "*" + mono;
    }
    if (s.empty()) {
      s = term;
    } else if (!term.empty() && term[0] == '-') {
      s += " - " + term.substr(1);
    } else {
      s += " + " + term;
    }
  }
  return s;
}

// GCD including any shared power of a1 (the projective root [1:0]), leading
// coefficient normalized to 1.  Errors when both inputs are zero.
inline BinaryForm bf_gcd(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd of zero forms undefined");
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();
  int v = std::min(f.alpha1_valuation(), g.alpha1_valuation());
  detail::Poly h = detail::poly_gcd(f.dehomogenize(), g.dehomogenize());
  BinaryForm r = BinaryForm::rehomogenize(h);
  if (v > 0) r = r * BinaryForm::a1().pow(v);
  return r.normalized();
}

// Yun squarefree decomposition of a nonzero form: pairs (f_i, i) with
// f = unit * prod f_i^i, each f_i squarefree and monic, pairwise coprime,
// multiplicities strictly increasing.  The a1-power factor is reported like
// any other squarefree factor (as the degree-one form a1 with its exponent).
inline std::vector<std::pair<BinaryForm, int>> bf_squarefree_decomposition(const BinaryForm& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero form");
  const int v = f.alpha1_valuation();
  auto uni = detail::poly_yun(f.dehomogenize());
  std::vector<std::pair<BinaryForm, int>> out;
  out.reserve(uni.size() + 1);
  for (auto& [p, m] : uni) out.emplace_back(BinaryForm::rehomogenize(p), m);
  if (v > 0) {
    bool merged = false;
    for (auto& [fac, m] : out) {
      if (m == v) {
        fac = fac * BinaryForm::a1();
        merged = true;
        break;
      }
    }
    if (!merged) out.emplace_back(BinaryForm::a1(), v);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

// Number of distinct roots of f on the complex projective line; counts [1:0]
// through the a1 factor.  Zero for constants; errors on the zero form.
inline int bf_distinct_root_count(const BinaryForm& f) {
  if (f.is_zero()) throw std::invalid_argument("root count of the zero form");
  int count = 0;
  for (const auto& [fac, m] : bf_squarefree_decomposition(f)) count += fac.degree();
  return count;
}

// Determinant of a square matrix of binary forms by cofactor expansion.
// Used where an evaluation-free symbolic route is wanted (resultants, and as
// an independent cross-check of interpolation-based determinants).
inline BinaryForm bf_matrix_det(const std::vector<std::vector<BinaryForm>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("form matrix is not square");
  if (n == 0) return BinaryForm::constant(1);
  if (n == 1) return m[0][0];
  BinaryForm det = BinaryForm::zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<BinaryForm>> sub(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      sub[r - 1].reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) sub[r - 1].push_back(m[r][c]);
    }
    BinaryForm term = m[0][j] * bf_matrix_det(sub);
    if (term.is_zero()) continue;
    if (j % 2 == 1) term = -term;
    det = det.is_zero() ? term : det + term;
  }
  return det;
}

}  // namespace qbetti
