#pragma once

// Serialization of run results: a versioned JSON document and a plain-text
// rendering with the rank grids drawn row j descending, column i ascending.
// Also the JSON input format: {"n": ..., "quadrics": [...]} where each
// quadric is either a polynomial string or a square matrix of Gaussian
// rational literal strings (exactness forbids floating-point entries).

#include "qbetti/run.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace qbetti {

inline nlohmann::json grid_to_json(const DimGrid& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (int j = 2 * g.n + 1; j >= 0; --j) {
    nlohmann::json row = nlohmann::json::array();
    for (int i = 0; i < g.cols; ++i) row.push_back(g.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::json report_to_json(const RunResult& r, bool dump_pages = false) {
  const BettiReport& rep = r.report;
  nlohmann::json doc;
  doc["version"] = 1;
  doc["n"] = rep.n;
  doc["classification"] = r.classification;
  if (r.profile) {
    doc["mu"] = r.profile->mu;
    doc["nu"] = r.profile->nu;
    nlohmann::json sigma = nlohmann::json::object();
    for (const auto& [j, count] : r.profile->sigma) sigma[std::to_string(j)] = count;
    doc["sigma"] = std::move(sigma);
  } else {
    doc["mu"] = nullptr;
    doc["nu"] = nullptr;
    doc["sigma"] = nlohmann::json::object();
  }
  doc["e2"] = grid_to_json(rep.e2);
  doc["e_inf"] = grid_to_json(rep.e_inf);
  doc["betti_R"] = rep.betti_R;
  doc["betti_C"] = rep.betti_C;
  doc["iC_even_ranks"] = rep.iC_even_ranks;
  doc["status"] = rep.status == SolveStatus::Resolved ? "resolved" : "ambiguous";
  nlohmann::json cands = nlohmann::json::array();
  for (const auto& [br, bc] : rep.candidates)
    cands.push_back(nlohmann::json{{"betti_R", br}, {"betti_C", bc}});
  doc["candidates"] = std::move(cands);
  doc["notes"] = rep.notes;
  if (dump_pages) {
    nlohmann::json pages = nlohmann::json::array();
    for (const auto& g : rep.pages) pages.push_back(grid_to_json(g));
    doc["pages"] = std::move(pages);
  }
  return doc;
}

namespace detail {

inline std::string vector_to_text(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ", ";
    s += std::to_string(v[k]);
  }
  return s + ")";
}

inline void grid_to_text(std::ostringstream& out, const DimGrid& g, const std::string& label) {
  out << label << ":\n";
  const int top = 2 * g.n + 1;
  int jwidth = static_cast<int>(std::to_string(top).size());
  for (int j = top; j >= 0; --j) {
    std::string js = std::to_string(j);
    out << "  j=" << std::string(jwidth - js.size(), ' ') << js << " |";
    for (int i = 0; i < g.cols; ++i) {
      int d = g.at(i, j);
      out << ' ' << (d == 0 ? "." : std::to_string(d));
    }
    out << '\n';
  }
  out << "  " << std::string(jwidth + 2, ' ') << " +" << std::string(2 * g.cols, '-') << '\n';
  out << "  " << std::string(jwidth + 2, ' ') << " i=";
  for (int i = 0; i < g.cols; ++i) out << ' ' << i;
  out << '\n';
}

}  // namespace detail

inline std::string report_to_text(const RunResult& r, bool dump_pages = false) {
  const BettiReport& rep = r.report;
  std::ostringstream out;
  out << "n              = " << rep.n << '\n';
  out << "classification = " << r.classification << '\n';
  out << "status         = " << (rep.status == SolveStatus::Resolved ? "resolved" : "ambiguous")
      << '\n';
  if (r.profile) {
    out << "mu = " << r.profile->mu << "   nu = " << r.profile->nu;
    for (const auto& [j, count] : r.profile->sigma)
      out << "   sigma_" << j << " = " << count;
    out << '\n';
    out << "det(P) = "
        << (r.profile->det_form.is_zero() ? std::string("0")
                                          : r.profile->det_form.to_string("a0", "a1"))
        << '\n';
  }
  if (r.kind == PipelineKind::SingleQuadric) out << "rho = " << r.rho << '\n';
  if (dump_pages) {
    for (std::size_t p = 0; p < rep.pages.size(); ++p)
      detail::grid_to_text(out, rep.pages[p], "E" + std::to_string(p + 2) + " page");
  } else {
    detail::grid_to_text(out, rep.e2, "E2 page");
  }
  detail::grid_to_text(out, rep.e_inf, "E_inf page");
  if (rep.status == SolveStatus::Resolved) {
    out << "betti_R        = " << detail::vector_to_text(rep.betti_R) << '\n';
    out << "betti_C        = " << detail::vector_to_text(rep.betti_C) << '\n';
    out << "iC even ranks  = " << detail::vector_to_text(rep.iC_even_ranks) << '\n';
  } else {
    out << "candidates:\n";
    for (const auto& [br, bc] : rep.candidates)
      out << "  betti_R = " << detail::vector_to_text(br)
          << "   betti_C = " << detail::vector_to_text(bc) << '\n';
  }
  for (const auto& note : rep.notes) out << "note: " << note << '\n';
  return out.str();
}

// {"n": int, "quadrics": [string | [[lit,...],...], ...]}
inline InputSpec input_from_json(const std::string& text, InputFlags flags = {}) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw std::invalid_argument("input file is not valid JSON");
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("quadrics"))
    throw std::invalid_argument("input must provide n and quadrics");
  if (!doc["n"].is_number_integer()) throw std::invalid_argument("n must be an integer");
  InputSpec spec;
  spec.n = doc["n"].get<int>();
  spec.flags = flags;
  if (spec.n < 0) throw std::invalid_argument("negative ambient dimension");
  if (!doc["quadrics"].is_array()) throw std::invalid_argument("quadrics must be a list");
  for (const auto& q : doc["quadrics"]) {
    if (q.is_string()) {
      spec.quadrics.push_back(quadric_from_string(q.get<std::string>(), spec.n));
    } else if (q.is_array()) {
      const int size = spec.n + 1;
      if (static_cast<int>(q.size()) != size)
        throw std::invalid_argument("quadric size does not match the ambient dimension");
      ComplexSymMatrix m(size);
      for (int i = 0; i < size; ++i) {
        if (!q[i].is_array() || static_cast<int>(q[i].size()) != size)
          throw std::invalid_argument("quadric size does not match the ambient dimension");
        for (int j = 0; j < size; ++j) {
          if (!q[i][j].is_string())
            throw std::invalid_argument("matrix entries must be rational literal strings");
          GaussianRational v = parse_gaussian(q[i][j].get<std::string>());
          if (j >= i)
            m.set(i, j, v);
          else if (m.at(j, i) != v)
            throw std::invalid_argument("matrix input is not symmetric");
        }
      }
      spec.quadrics.push_back(std::move(m));
    } else {
      throw std::invalid_argument("each quadric must be a string or a matrix");
    }
  }
  return spec;
}

}  // namespace qbetti
