#pragma once

// Exact linear algebra for the realification step: symmetric matrices over
// Q(i) and Q, fraction-free rank/determinant, and inertia by symmetric
// congruence.  A complex quadric q(z) = z^T Q z with Q = A - iB realifies to
// the pair of real quadrics
//   q^a = Re q(x+iy)  with Gram  [[ A, B], [B, -A]]
//   q^b = Im q(x+iy)  with Gram  [[-B, A], [A,  B]]
// and rk_R of either realified Gram is twice rk_C(Q), with neutral inertia.

#include "qbetti/numeric.hpp"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qbetti {

// Minor enumeration downstream is combinatorial; desk scale suffices.
inline constexpr int kMaxAmbientDim = 12;          // largest supported n
inline constexpr int kMaxComplexSize = kMaxAmbientDim + 1;
inline constexpr int kMaxRealSize = 2 * kMaxComplexSize;

namespace detail {

template <typename K>
using DenseMatrix = std::vector<std::vector<K>>;

// Fraction-free (Bareiss) elimination.  Exact over any field; the division
// by the previous pivot is exact by the Sylvester identity, which keeps the
// intermediate entries to (ratios of) minors of the input.
template <typename K>
int bareiss_rank(DenseMatrix<K> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  K prev(1);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c)
        m[r][c] = (m[r][c] * m[rank][col] - m[r][col] * m[rank][c]) / prev;
      m[r][col] = K(0);
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

template <typename K>
K bareiss_det(DenseMatrix<K> m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return K(1);
  K prev(1);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r) {
      if (!m[r][k].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return K(0);
    if (pivot != k) {
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) / prev;
      m[r][k] = K(0);
    }
    prev = m[k][k];
  }
  K det = m[n - 1][n - 1];
  return negate ? K(0) - det : det;
}

}  // namespace detail

template <typename K, int MaxSize>
class SymMatrixBase {
public:
  SymMatrixBase() : size_(0) {}
  explicit SymMatrixBase(int size) : size_(size), e_(static_cast<std::size_t>(size) * size) {
    if (size < 1 || size > MaxSize) throw std::invalid_argument("unsupported matrix size");
  }

  int size() const { return size_; }

  const K& at(int i, int j) const { return e_[idx(i, j)]; }

  // Writes both (i, j) and (j, i); the type never holds asymmetric data.
  void set(int i, int j, const K& v) {
    e_[idx(i, j)] = v;
    e_[idx(j, i)] = v;
  }

  void add(int i, int j, const K& v) {
    e_[idx(i, j)] += v;
    if (i != j) e_[idx(j, i)] += v;
  }

  bool is_zero() const {
    for (const auto& v : e_)
      if (!v.is_zero()) return false;
    return true;
  }

  detail::DenseMatrix<K> dense() const {
    detail::DenseMatrix<K> m(size_, std::vector<K>(size_));
    for (int i = 0; i < size_; ++i)
      for (int j = 0; j < size_; ++j) m[i][j] = at(i, j);
    return m;
  }

  friend bool operator==(const SymMatrixBase& a, const SymMatrixBase& b) {
    return a.size_ == b.size_ && a.e_ == b.e_;
  }

private:
  std::size_t idx(int i, int j) const {
    if (i < 0 || j < 0 || i >= size_ || j >= size_) throw std::out_of_range("matrix index");
    return static_cast<std::size_t>(i) * size_ + j;
  }

  int size_;
  std::vector<K> e_;
};

// Gram matrix of a complex quadric on C^(n+1); size = n+1.
using ComplexSymMatrix = SymMatrixBase<GaussianRational, kMaxComplexSize>;

// Real symmetric matrix, sized for realifications (up to 2(n+1)).
using RealSymMatrix = SymMatrixBase<Rational, kMaxRealSize>;

// Q = A - iB with A, B real symmetric: returns (A, B).
inline std::pair<RealSymMatrix, RealSymMatrix> decompose(const ComplexSymMatrix& q) {
  RealSymMatrix a(q.size()), b(q.size());
  for (int i = 0; i < q.size(); ++i)
    for (int j = i; j < q.size(); ++j) {
      a.set(i, j, q.at(i, j).re());
      b.set(i, j, -q.at(i, j).im());
    }
  return {std::move(a), std::move(b)};
}

// Gram of Re q(x+iy): [[A, B], [B, -A]].
inline RealSymMatrix realify_a(const ComplexSymMatrix& q) {
  auto [a, b] = decompose(q);
  const int n = q.size();
  RealSymMatrix m(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m.set(i, j, a.at(i, j));
      m.set(i, n + j, b.at(i, j));
      m.set(n + i, n + j, -a.at(i, j));
    }
  return m;
}

// Gram of Im q(x+iy): [[-B, A], [A, B]].
inline RealSymMatrix realify_b(const ComplexSymMatrix& q) {
  auto [a, b] = decompose(q);
  const int n = q.size();
  RealSymMatrix m(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m.set(i, j, -b.at(i, j));
      m.set(i, n + j, a.at(i, j));
      m.set(n + i, n + j, b.at(i, j));
    }
  return m;
}

inline int rank_complex(const ComplexSymMatrix& q) { return detail::bareiss_rank(q.dense()); }

inline int rank_real(const RealSymMatrix& m) { return detail::bareiss_rank(m.dense()); }

inline GaussianRational det_complex(const ComplexSymMatrix& q) { return detail::bareiss_det(q.dense()); }

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

// Exact inertia by symmetric congruence: diagonal pivots preferred, with the
// hyperbolic fallback when every remaining diagonal entry vanishes — a block
// [[0, c], [c, 0]] contributes one positive and one negative index.
inline Inertia inertia(const RealSymMatrix& m) {
  auto a = m.dense();
  std::vector<int> active(m.size());
  for (int i = 0; i < m.size(); ++i) active[i] = i;
  Inertia out;
  while (!active.empty()) {
    int diag = -1;
    for (int k : active) {
      if (a[k][k] != 0) {
        diag = k;
        break;
      }
    }
    if (diag >= 0) {
      const Rational d = a[diag][diag];
      (d > 0 ? out.positive : out.negative)++;
      std::vector<int> rest;
      rest.reserve(active.size() - 1);
      for (int k : active)
        if (k != diag) rest.push_back(k);
      for (int r : rest) {
        const Rational f = a[r][diag] / d;
        if (f == 0) continue;
        for (int c : rest) a[r][c] -= f * a[diag][c];
      }
      for (int r : rest) {
        a[r][diag] = 0;
        a[diag][r] = 0;
      }
      active = std::move(rest);
      continue;
    }
    // All remaining diagonal entries vanish; find an off-diagonal coupling.
    int pi = -1, pj = -1;
    for (std::size_t x = 0; x < active.size() && pi < 0; ++x)
      for (std::size_t y = x + 1; y < active.size(); ++y)
        if (a[active[x]][active[y]] != 0) {
          pi = active[x];
          pj = active[y];
          break;
        }
    if (pi < 0) {
      out.zero += static_cast<int>(active.size());
      break;
    }
    const Rational c = a[pi][pj];
    out.positive++;
    out.negative++;
    std::vector<int> rest;
    rest.reserve(active.size() - 2);
    for (int k : active)
      if (k != pi && k != pj) rest.push_back(k);
    // Schur complement against the 2x2 block [[0, c], [c, 0]].
    for (int r : rest)
      for (int s : rest)
        if (s <= r) {
          Rational v = a[r][s] - (a[r][pi] * a[s][pj] + a[r][pj] * a[s][pi]) / c;
          a[r][s] = v;
          a[s][r] = v;
        }
    for (int r : rest) {
      a[r][pi] = a[pi][r] = 0;
      a[r][pj] = a[pj][r] = 0;
    }
    active = std::move(rest);
  }
  return out;
}

// First Stiefel-Whitney datum of the line-bundle restriction: rk_C(Q) mod 2.
inline int w1_parity(const ComplexSymMatrix& q) { return rank_complex(q) & 1; }

}  // namespace qbetti
