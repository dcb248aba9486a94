// qbetti: Z2 Betti numbers of intersections of one or two quadrics in
// complex projective space, by exact arithmetic.
//
// Subcommands:
//   analyze  full pipeline: profile, spectral pages, Betti vectors
//   profile  pencil stratification only (mu, nu, sigma, classification)
//   e2       analyze with every page of the representative branch dumped
//   oracle   resultant-based point count in the plane (n = 2)
//
// Exit codes: 0 resolved, 2 ambiguous, 1 input error.

#include <CLI11.hpp>

#include "qbetti/oracle.hpp"
#include "qbetti/report_io.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

struct Options {
  std::string input_file;
  std::string q0_text;
  std::string q1_text;
  bool q1_given = false;
  int n = -1;
  std::string format = "text";
  bool dump_pages = false;
  bool no_nonempty = false;
  std::uint64_t seed = 2026;
  int max_n = 12;
};

void add_common_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--input", o.input_file,
                  "JSON input file: {\"n\": int, \"quadrics\": [string | matrix, ...]}");
  cmd->add_option("--q0", o.q0_text, "first quadric, e.g. \"z0*z2 - z1^2\"");
  cmd->add_option("--q1", o.q1_text, "second quadric")->each([&](const std::string&) {
    o.q1_given = true;
  });
  cmd->add_option("--n", o.n, "ambient projective dimension (variables z0..zn)");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--dump-pages", o.dump_pages, "include every spectral page in the output");
  cmd->add_flag("--no-nonempty-constraint", o.no_nonempty,
                "do not assume the complex intersection is nonempty");
  cmd->add_option("--seed", o.seed, "seed for the oracle's coordinate frames");
  cmd->add_option("--max-n", o.max_n, "guard: largest accepted ambient dimension");
}

qbetti::InputSpec build_spec(const Options& o) {
  qbetti::InputFlags flags;
  flags.format = o.format;
  flags.dump_pages = o.dump_pages;
  if (o.no_nonempty) flags.assume_nonempty = false;
  flags.seed = o.seed;
  flags.max_n = o.max_n;

  if (!o.input_file.empty()) {
    std::ifstream in(o.input_file);
    if (!in) throw std::invalid_argument("cannot open input file: " + o.input_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    return qbetti::input_from_json(buf.str(), flags);
  }
  if (o.n < 0) throw std::invalid_argument("provide --input FILE, or --n with --q0 [--q1]");
  qbetti::InputSpec spec;
  spec.n = o.n;
  spec.flags = flags;
  spec.quadrics.push_back(qbetti::quadric_from_string(o.q0_text, o.n));
  if (o.q1_given) spec.quadrics.push_back(qbetti::quadric_from_string(o.q1_text, o.n));
  return spec;
}

int run_analyze(const Options& o) {
  qbetti::InputSpec spec = build_spec(o);
  qbetti::RunResult r = qbetti::analyze(spec);
  if (spec.flags.format == "json")
    std::cout << qbetti::report_to_json(r, spec.flags.dump_pages).dump(2) << '\n';
  else
    std::cout << qbetti::report_to_text(r, spec.flags.dump_pages);
  return r.exit_code;
}

int run_profile(const Options& o) {
  qbetti::InputSpec spec = build_spec(o);
  qbetti::detail::validate_input(spec);

  std::vector<qbetti::ComplexSymMatrix> live;
  for (const auto& q : spec.quadrics)
    if (!qbetti::detail::matrix_is_zero(q)) live.push_back(q);

  nlohmann::json doc;
  doc["version"] = 1;
  doc["n"] = spec.n;
  std::ostringstream text;
  text << "n = " << spec.n << '\n';
  if (live.size() == 2 && !qbetti::Pencil(live[0], live[1]).linearly_dependent()) {
    qbetti::PencilProfile pp = qbetti::profile(qbetti::Pencil(live[0], live[1]));
    doc["classification"] = qbetti::to_string(pp.classification);
    doc["mu"] = pp.mu;
    doc["nu"] = pp.nu;
    nlohmann::json sigma = nlohmann::json::object();
    for (const auto& [j, count] : pp.sigma) sigma[std::to_string(j)] = count;
    doc["sigma"] = std::move(sigma);
    doc["det"] = pp.det_form.is_zero() ? "0" : pp.det_form.to_string("a0", "a1");
    text << "classification = " << qbetti::to_string(pp.classification) << '\n';
    text << "mu = " << pp.mu << "   nu = " << pp.nu;
    for (const auto& [j, count] : pp.sigma) text << "   sigma_" << j << " = " << count;
    text << '\n';
    text << "det(P) = " << doc["det"].get<std::string>() << '\n';
  } else if (!live.empty()) {
    int rho = qbetti::rank_complex(live[0]);
    doc["classification"] = "single-quadric";
    doc["rho"] = rho;
    text << "classification = single-quadric\nrho = " << rho << '\n';
  } else {
    doc["classification"] = "projective-space";
    text << "classification = projective-space\n";
  }
  if (spec.flags.format == "json")
    std::cout << doc.dump(2) << '\n';
  else
    std::cout << text.str();
  return 0;
}

int run_oracle(const Options& o) {
  qbetti::InputSpec spec = build_spec(o);
  if (spec.n != 2 || spec.quadrics.size() != 2)
    throw std::invalid_argument("the oracle needs two quadrics in the plane (n = 2)");
  qbetti::PointCount pc = qbetti::point_count_cp2(spec.quadrics[0], spec.quadrics[1],
                                                  spec.flags.seed);
  if (spec.flags.format == "json") {
    nlohmann::json doc;
    doc["version"] = 1;
    doc["infinite"] = pc.infinite;
    if (pc.infinite)
      doc["value"] = nullptr;
    else
      doc["value"] = pc.value;
    doc["certified"] = pc.certified;
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "count = " << (pc.infinite ? std::string("infinite") : std::to_string(pc.value))
              << (pc.certified ? " (certified)" : " (uncertified)") << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Z2 Betti numbers of one- and two-quadric intersections in CP^n"};
  app.require_subcommand(1);

  Options opts;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "full pipeline to Betti vectors");
  CLI::App* profile_cmd = app.add_subcommand("profile", "pencil stratification only");
  CLI::App* e2_cmd = app.add_subcommand("e2", "analyze and dump every spectral page");
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "resultant point count in the plane");
  for (CLI::App* cmd : {analyze_cmd, profile_cmd, e2_cmd, oracle_cmd})
    add_common_options(cmd, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze_cmd->parsed()) return run_analyze(opts);
    if (e2_cmd->parsed()) {
      Options paged = opts;
      paged.dump_pages = true;
      return run_analyze(paged);
    }
    if (profile_cmd->parsed()) return run_profile(opts);
    if (oracle_cmd->parsed()) return run_oracle(opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
