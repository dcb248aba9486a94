#pragma once

// Pipeline routing: validated input -> the right analysis path
// (projective space for zero forms, single quadric, or a genuine pencil)
// -> a BettiReport plus run-level metadata.

#include "qbetti/parse.hpp"
#include "qbetti/pencil.hpp"
#include "qbetti/spectral.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qbetti {

struct InputFlags {
  std::string format = "text";  // "text" | "json"
  bool dump_pages = false;
  std::optional<bool> assume_nonempty;  // unset -> pipeline default
  std::uint64_t seed = 2026;
  int max_n = 12;  // guard against accidental huge inputs
};

struct InputSpec {
  int n = -1;
  std::vector<ComplexSymMatrix> quadrics;  // one or two; zero matrices allowed
  InputFlags flags;
};

enum class PipelineKind { ProjectiveSpace, SingleQuadric, Pencil };

struct RunResult {
  PipelineKind kind = PipelineKind::Pencil;
  std::string classification;  // "complete-intersection", "constant-rank",
                               // "generic-determinant", "other",
                               // "single-quadric", "projective-space"
  BettiReport report;
  std::optional<PencilProfile> profile;  // pencil path only
  int rho = -1;                          // single-quadric path: complex rank
  int exit_code = 0;                     // 0 resolved, 2 ambiguous
};

namespace detail {

inline bool matrix_is_zero(const ComplexSymMatrix& m) {
  for (int i = 0; i < m.size(); ++i)
    for (int j = i; j < m.size(); ++j)
      if (!m.at(i, j).is_zero()) return false;
  return true;
}

inline void validate_input(const InputSpec& in) {
  if (in.n < 0) throw std::invalid_argument("negative ambient dimension");
  if (in.n > in.flags.max_n)
    throw std::invalid_argument("ambient dimension exceeds the configured bound");
  if (in.quadrics.empty() || in.quadrics.size() > 2)
    throw std::invalid_argument("expected one or two quadrics");
  for (const auto& q : in.quadrics)
    if (q.size() != in.n + 1)
      throw std::invalid_argument("quadric size does not match the ambient dimension");
}

// C = CP^n (no conditions): R = RP^{2n+1}, every Z2 Betti number 1.
inline RunResult projective_space_result(int n) {
  RunResult r;
  r.kind = PipelineKind::ProjectiveSpace;
  r.classification = "projective-space";
  BettiReport& rep = r.report;
  rep.n = n;
  rep.status = SolveStatus::Resolved;
  DimGrid g(n, 1);
  for (int j = 0; j <= 2 * n + 1; ++j) g.set(0, j, 1);
  rep.e2 = g;
  rep.e_inf = g;
  rep.pages = {g};
  rep.betti_R.assign(2 * n + 2, 1);
  rep.betti_C.assign(2 * n + 1, 0);
  for (int j = 0; j <= 2 * n; j += 2) rep.betti_C[j] = 1;
  rep.iC_even_ranks.assign(n + 1, 1);
  return r;
}

}  // namespace detail

// Parse a quadric string, mapping the "zero form" error to the explicit
// zero Gram matrix so the router can handle it like a zero matrix input.
inline ComplexSymMatrix quadric_from_string(const std::string& text, int n) {
  try {
    return parse_quadric(text, n);
  } catch (const std::invalid_argument& e) {
    if (std::string(e.what()) == "zero form") return ComplexSymMatrix(n + 1);
    throw;
  }
}

inline RunResult analyze(const InputSpec& in) {
  detail::validate_input(in);
  const int n = in.n;

  std::vector<std::string> notes;
  std::vector<ComplexSymMatrix> live;
  for (const auto& q : in.quadrics)
    if (!detail::matrix_is_zero(q))
      live.push_back(q);
    else
      notes.push_back("dropped an identically zero quadric; it imposes no condition");

  RunResult result;
  if (live.empty()) {
    result = detail::projective_space_result(n);
  } else if (live.size() == 2 && Pencil(live[0], live[1]).linearly_dependent()) {
    notes.push_back("the two quadrics are linearly dependent; analyzing a single quadric");
    live.pop_back();
  }

  if (live.size() == 1) {
    result.kind = PipelineKind::SingleQuadric;
    result.classification = "single-quadric";
    result.rho = rank_complex(live[0]);
    SolveOptions opts{in.flags.assume_nonempty.value_or(false)};
    result.report = solve_single(n, result.rho, opts);
    notes.push_back("single quadric of complex rank " + std::to_string(result.rho));
  } else if (live.size() == 2) {
    result.kind = PipelineKind::Pencil;
    Pencil pencil(live[0], live[1]);
    PencilProfile pp = profile(pencil);
    result.classification = to_string(pp.classification);
    SolveOptions opts{in.flags.assume_nonempty.value_or(n >= 2)};
    result.report = solve(pp, opts);
    result.profile = std::move(pp);
  }

  result.report.notes.insert(result.report.notes.begin(), notes.begin(), notes.end());
  result.exit_code = result.report.status == SolveStatus::Resolved ? 0 : 2;
  return result;
}

}  // namespace qbetti
