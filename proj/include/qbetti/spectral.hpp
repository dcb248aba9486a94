#pragma once

// The mod-2 spectral sequence attached to one quadric or a pencil of quadrics
// on C^{n+1}, specialized to the real double cover R inside RP^{2n+1}.
//
// E2 support patterns (rows j = 0..2n+1):
//   one quadric of rank rho (columns 0..2):
//     entry(0, j) = 1 for rho <= j <= 2n+1;  entry(2, j) = 1 for j < rho.
//   pencil with invariants (mu, nu, sigma_j) (columns 0..4):
//     entry(0, j) = 1 for j >= mu;
//     entry(2, j) = sigma_{j+1} and entry(3, j) = sigma_{j+1} - 1 for
//     nu <= j < mu;  entry(4, j) = 1 for j < nu.
//
// The differential d_r maps (i, j) -> (i+r, j-r+1).  Page 2 has closed-form
// ranks for the two pencil differentials that can be nonzero; every other
// potentially nonzero differential is enumerated over all feasible ranks and
// the branches are filtered by the structural constraints on E_inf:
//   (C0) nothing survives above the top antidiagonal i + j = 2n+1;
//   (C1) column 0 is a contiguous block of 1s starting at row 2n+1, of even
//        length (possibly zero);
//   (C2) the Betti numbers of C derived by the alternating sums are >= 0;
//   (C3) optionally, b_0(C) >= 1.
// Betti numbers of R are the antidiagonal sums b_k(R) = sum E_inf(i, j) over
// i + j = 2n+1-k, and b_j(C) = sum_{k<=j} (-1)^k b_{j-k}(R).

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qbetti/pencil.hpp"

namespace qbetti {

// A table of Z/2-dimensions indexed by (column i, row j); out-of-table reads
// are 0, which lets differential targets be probed uniformly.
struct DimGrid {
  int n = 0;
  int cols = 0;
  std::vector<int> v;  // row-major: v[j * cols + i]

  DimGrid() = default;
  DimGrid(int n_, int cols_) : n(n_), cols(cols_), v(static_cast<std::size_t>(2 * n_ + 2) * cols_, 0) {
    if (n_ < 0 || cols_ < 1) throw std::invalid_argument("bad grid shape");
  }

  int rows() const { return 2 * n + 2; }
  bool inside(int i, int j) const { return i >= 0 && i < cols && j >= 0 && j < rows(); }
  int at(int i, int j) const { return inside(i, j) ? v[static_cast<std::size_t>(j) * cols + i] : 0; }
  void set(int i, int j, int d) {
    if (!inside(i, j)) throw std::out_of_range("grid cell out of range");
    v[static_cast<std::size_t>(j) * cols + i] = d;
  }

  friend bool operator==(const DimGrid&, const DimGrid&) = default;
};

enum class Provenance { Formula, ForcedZero, Enumerated };

struct DifferentialAssignment {
  int page = 0;
  int i = 0, j = 0;  // source cell; target is (i + page, j - page + 1)
  int rank = 0;
  Provenance provenance = Provenance::ForcedZero;
};

enum class SolveStatus { Resolved, Ambiguous };

inline DimGrid e2_single(int n, int rho) {
  if (n < 0) throw std::invalid_argument("negative ambient dimension");
  if (rho < 1 || rho > n + 1)
    throw std::invalid_argument("quadric rank out of range (zero form handled upstream)");
  DimGrid g(n, 3);
  for (int j = rho; j <= 2 * n + 1; ++j) g.set(0, j, 1);
  for (int j = 0; j < rho; ++j) g.set(2, j, 1);
  return g;
}

inline DimGrid e2_pencil(const PencilProfile& pp) {
  DimGrid g(pp.n, 5);
  for (int j = pp.mu; j <= 2 * pp.n + 1; ++j) g.set(0, j, 1);
  for (int j = pp.nu; j < pp.mu; ++j) {
    g.set(2, j, pp.sigma_at(j + 1));
    g.set(3, j, pp.sigma_at(j + 1) - 1);
  }
  for (int j = 0; j < pp.nu; ++j) g.set(4, j, 1);
  return g;
}

// The two page-2 differentials of a pencil that can be nonzero, with their
// closed-form ranks where available:
//   d2 at (2, nu) is multiplication by (nu mod 2) into the 1-dimensional
//   (4, nu-1), so its rank is nu mod 2 whenever source and target exist;
//   d2 at (0, mu), when mu = n+1, sends the generator to the vector of
//   det-root multiplicity parities, so its rank is 1 exactly when some root
//   has odd multiplicity.  For mu < n+1 no formula is available and the rank
//   is left to enumeration.
inline std::vector<DifferentialAssignment> d2_ranks(const PencilProfile& pp) {
  std::vector<DifferentialAssignment> out;
  {
    DifferentialAssignment a{2, 0, pp.mu, 0, Provenance::ForcedZero};
    if (pp.nu < pp.mu) {  // target (2, mu-1) sits in the band with dim sigma_mu >= 1
      if (pp.mu == pp.n + 1) {
        a.rank = pp.exists_odd_multiplicity ? 1 : 0;
        a.provenance = Provenance::Formula;
      } else {
        a.provenance = Provenance::Enumerated;
      }
    }
    out.push_back(a);
  }
  {
    DifferentialAssignment a{2, 2, pp.nu, 0, Provenance::ForcedZero};
    if (pp.nu < pp.mu && pp.nu >= 1) {  // source dim sigma_{nu+1} >= 1, target (4, nu-1) = 1
      a.rank = pp.nu % 2;
      a.provenance = Provenance::Formula;
    }
    out.push_back(a);
  }
  return out;
}

// One page turn: dim E_{r+1}(i,j) = dim E_r(i,j) - rank(out) - rank(in).
inline DimGrid turn_page(const DimGrid& g, int r, const std::vector<DifferentialAssignment>& as) {
  std::vector<int> delta(g.v.size(), 0);
  for (const auto& a : as) {
    if (a.page != r) throw std::invalid_argument("assignment belongs to a different page");
    const int ti = a.i + r, tj = a.j - r + 1;
    if (a.rank < 0 || a.rank > std::min(g.at(a.i, a.j), g.at(ti, tj)))
      throw std::invalid_argument("violated rank bound");
    if (a.rank == 0) continue;
    delta[static_cast<std::size_t>(a.j) * g.cols + a.i] += a.rank;
    delta[static_cast<std::size_t>(tj) * g.cols + ti] += a.rank;
  }
  DimGrid ng = g;
  for (std::size_t idx = 0; idx < ng.v.size(); ++idx) {
    ng.v[idx] -= delta[idx];
    if (ng.v[idx] < 0) throw std::invalid_argument("violated rank bound");
  }
  return ng;
}

struct SolveOptions {
  bool nonempty_constraint = false;  // (C3) require b_0(C) >= 1
};

struct BettiReport {
  int n = 0;
  SolveStatus status = SolveStatus::Resolved;
  std::vector<int> betti_R;        // length 2n+2 (empty when Ambiguous)
  std::vector<int> betti_C;        // length 2n+1 (empty when Ambiguous)
  std::vector<int> iC_even_ranks;  // rk(i_C^*)_{2k} = dim E_inf(0, 2n+1-2k), k = 0..n
  DimGrid e2;
  DimGrid e_inf;                // representative surviving branch
  std::vector<DimGrid> pages;   // E2..E_inf of the representative branch
  std::vector<DifferentialAssignment> assignments;  // applied by the representative
  std::vector<std::pair<std::vector<int>, std::vector<int>>> candidates;  // (betti_R, betti_C)
  std::vector<std::string> notes;
};

namespace detail {

struct EinfSummary {
  bool ok = false;
  std::vector<int> betti_R, betti_C, ic;
};

inline EinfSummary summarize_einf(const DimGrid& einf, bool nonempty_needed) {
  EinfSummary s;
  const int top = 2 * einf.n + 1;
  // (C0) convergence: nothing above the top antidiagonal
  for (int j = 0; j <= top; ++j)
    for (int i = 0; i < einf.cols; ++i)
      if (i + j > top && einf.at(i, j) != 0) return s;
  // (C1) column 0: contiguous even-length block of 1s from the top row down
  int block = 0, j = top;
  while (j >= 0 && einf.at(0, j) == 1) {
    ++block;
    --j;
  }
  if (block % 2 != 0) return s;
  for (; j >= 0; --j)
    if (einf.at(0, j) != 0) return s;
  // Betti numbers of R by antidiagonal sums
  s.betti_R.assign(top + 1, 0);
  for (int row = 0; row <= top; ++row)
    for (int i = 0; i < einf.cols && i + row <= top; ++i) s.betti_R[top - (i + row)] += einf.at(i, row);
  // (C2) alternating sums give nonnegative Betti numbers of C
  s.betti_C.assign(top, 0);  // length 2n+1
  int carry = 0;             // b_{j-1}(C)
  for (int k = 0; k < top; ++k) {
    int b = s.betti_R[k] - carry;
    if (b < 0) return s;
    s.betti_C[k] = b;
    carry = b;
  }
  // (C3)
  if (nonempty_needed && s.betti_C[0] < 1) return s;
  for (int k = 0; k <= einf.n; ++k) s.ic.push_back(einf.at(0, top - 2 * k));
  s.ok = true;
  return s;
}

struct Survivor {
  std::vector<DimGrid> pages;
  std::vector<DifferentialAssignment> log;
  EinfSummary summary;
};

// Depth-first enumeration of all differential-rank assignments from E2 to the
// terminal page, keeping the branches whose E_inf passes the constraints.
inline std::vector<Survivor> enumerate_branches(
    const DimGrid& e2, const std::map<std::pair<int, int>, DifferentialAssignment>& page2_known,
    const SolveOptions& opts) {
  std::vector<Survivor> survivors;
  const int last_r = e2.cols - 1;  // d_r vanishes once column 0 maps past the last column

  struct Frame {
    std::vector<DimGrid> pages;
    std::vector<DifferentialAssignment> log;
  };

  auto recurse = [&](auto&& self, Frame frame, int r) -> void {
    const DimGrid& g = frame.pages.back();
    if (r > last_r) {
      EinfSummary s = summarize_einf(g, opts.nonempty_constraint);
      if (s.ok) survivors.push_back({std::move(frame.pages), std::move(frame.log), std::move(s)});
      return;
    }
    // cells with nonzero source and target at this page
    std::vector<DifferentialAssignment> cells;
    for (int j = 0; j < g.rows(); ++j)
      for (int i = 0; i < g.cols; ++i) {
        if (g.at(i, j) == 0 || g.at(i + r, j - r + 1) == 0) continue;
        DifferentialAssignment a{r, i, j, 0, Provenance::Enumerated};
        if (r == 2) {
          auto it = page2_known.find({i, j});
          if (it != page2_known.end() && it->second.provenance == Provenance::Formula) {
            a.rank = it->second.rank;
            a.provenance = Provenance::Formula;
          }
        }
        cells.push_back(a);
      }
    auto assign = [&](auto&& self_assign, std::size_t k, std::vector<DifferentialAssignment>& chosen) -> void {
      if (k == cells.size()) {
        DimGrid next;
        try {
          next = turn_page(g, r, chosen);
        } catch (const std::invalid_argument&) {
          return;  // combined in/out ranks exceed a cell dimension: infeasible branch
        }
        Frame nf = frame;
        nf.pages.push_back(std::move(next));
        nf.log.insert(nf.log.end(), chosen.begin(), chosen.end());
        self(self, std::move(nf), r + 1);
        return;
      }
      DifferentialAssignment a = cells[k];
      if (a.provenance == Provenance::Formula) {
        chosen.push_back(a);
        self_assign(self_assign, k + 1, chosen);
        chosen.pop_back();
        return;
      }
      const int bound = std::min(g.at(a.i, a.j), g.at(a.i + r, a.j - r + 1));
      for (int rk = 0; rk <= bound; ++rk) {
        a.rank = rk;
        chosen.push_back(a);
        self_assign(self_assign, k + 1, chosen);
        chosen.pop_back();
      }
    };
    std::vector<DifferentialAssignment> chosen;
    assign(assign, 0, chosen);
  };

  recurse(recurse, Frame{{e2}, {}}, 2);
  return survivors;
}

inline BettiReport build_report(int n, const DimGrid& e2,
                                const std::map<std::pair<int, int>, DifferentialAssignment>& page2_known,
                                const SolveOptions& opts) {
  std::vector<Survivor> survivors = enumerate_branches(e2, page2_known, opts);
  if (survivors.empty()) throw std::runtime_error("inconsistent profile");

  using BettiPair = std::pair<std::vector<int>, std::vector<int>>;
  std::map<BettiPair, std::size_t> groups;  // candidate -> index of first survivor
  for (std::size_t s = 0; s < survivors.size(); ++s)
    groups.emplace(BettiPair{survivors[s].summary.betti_R, survivors[s].summary.betti_C}, s);

  BettiReport rep;
  rep.n = n;
  rep.e2 = e2;
  const Survivor& first_of_lex_least = survivors[groups.begin()->second];
  rep.pages = first_of_lex_least.pages;
  rep.e_inf = rep.pages.back();
  rep.assignments = first_of_lex_least.log;

  if (groups.size() == 1) {
    rep.status = SolveStatus::Resolved;
    rep.betti_R = survivors[0].summary.betti_R;
    rep.betti_C = survivors[0].summary.betti_C;
    rep.iC_even_ranks = survivors[0].summary.ic;
  } else {
    rep.status = SolveStatus::Ambiguous;
    for (const auto& [pair, idx] : groups) rep.candidates.push_back(pair);
    rep.notes.push_back(std::to_string(groups.size()) +
                        " Betti candidates survive the structural constraints");
    // report the enumerated differentials whose surviving ranks differ
    std::map<std::tuple<int, int, int>, std::set<int>> ranks_seen;
    for (const auto& s : survivors)
      for (const auto& a : s.log)
        if (a.provenance == Provenance::Enumerated) ranks_seen[{a.page, a.i, a.j}].insert(a.rank);
    for (const auto& [key, ranks] : ranks_seen)
      if (ranks.size() > 1)
        rep.notes.push_back("undetermined differential d" + std::to_string(std::get<0>(key)) + " at (" +
                            std::to_string(std::get<1>(key)) + "," + std::to_string(std::get<2>(key)) +
                            ")");
  }
  return rep;
}

}  // namespace detail

inline BettiReport solve(const PencilProfile& pp, const SolveOptions& opts) {
  std::map<std::pair<int, int>, DifferentialAssignment> known;
  for (const auto& a : d2_ranks(pp)) known.emplace(std::pair<int, int>{a.i, a.j}, a);
  return detail::build_report(pp.n, e2_pencil(pp), known, opts);
}

// Default: require a nonempty C for two quadrics when n >= 2 (always true by
// the projective dimension count), not in the edge dimensions.
inline BettiReport solve(const PencilProfile& pp) { return solve(pp, SolveOptions{pp.n >= 2}); }

inline BettiReport solve_single(int n, int rho, const SolveOptions& opts = SolveOptions{false}) {
  return detail::build_report(n, e2_single(n, rho), {}, opts);
}

// Betti numbers of a single quadric of rank rho in CP^n: 1 in each even
// degree j <= 2n-2, with the middle value 2 in degree 2n-rho when rho is even.
inline std::vector<int> closed_form_single(int n, int rho) {
  if (rho < 1 || rho > n + 1) throw std::invalid_argument("quadric rank out of range");
  std::vector<int> b(2 * n + 1, 0);
  for (int j = 0; j <= 2 * n - 2; j += 2) b[j] = 1;
  if (rho % 2 == 0) b[2 * n - rho] = 2;
  return b;
}

// Betti numbers of a smooth complete intersection of two quadrics in CP^n:
// 1 in each even degree j <= 2(n-2), except the middle degree n-2 carries
// n+2 when n is even; for odd n the middle degree n-2 is odd and carries n-1.
inline std::vector<int> closed_form_complete_intersection(int n) {
  if (n < 2) throw std::invalid_argument("complete intersection needs n >= 2");
  std::vector<int> b(2 * n + 1, 0);
  for (int j = 0; j <= 2 * (n - 2); j += 2) b[j] = 1;
  b[n - 2] = (n % 2 == 0) ? n + 2 : n - 1;
  return b;
}

}  // namespace qbetti
