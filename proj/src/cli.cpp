#include "udisc/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "udisc/ensemble_io.hpp"
#include "udisc/generators.hpp"
#include "udisc/report.hpp"

namespace udisc::cli {

namespace {

using nlohmann::json;

struct InputArgs {
  std::string path;
  bool as_json = false;
};

// Maps library failures onto the exit-code contract.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return kFileError;
  } catch (const FormatError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ConditionFails: return kIdentifiabilityError;
      case ErrorKind::DeskScaleExceeded: return kScaleError;
      case ErrorKind::InvalidTolerance: return kFlagError;
      default: return kValidationError;
    }
  }
}

void print_list(std::ostream& out, const char* label, const auto& values) {
  out << label << ":";
  for (const auto& v : values) out << ' ' << v;
  out << "\n";
}

void print_bools(std::ostream& out, const char* label, const std::vector<bool>& values) {
  out << label << ":";
  for (bool v : values) out << (v ? " true" : " false");
  out << "\n";
}

void emit_json(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

int write_output(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path.empty() || path == "-") {
    out << text;
    return kOk;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << text)) {
    err << "error: cannot write " << path << "\n";
    return kFileError;
  }
  return kOk;
}

int cmd_classify(const InputArgs& in, const ToleranceConfig& tol, std::ostream& out) {
  const Ensemble e = read_ensemble_file(in.path, tol);
  const DistinguishabilityClass c = classify_ensemble(e, tol);
  const LinearIndependenceGap gap = linear_independence_gap(e, tol);
  if (in.as_json) {
    emit_json(out, {{"schema_version", kSchemaVersion},
                    {"document", "classification"},
                    {"classification", classification_json(c)},
                    {"linear_independence",
                     {{"linearly_independent", gap.linearly_independent}, {"unambiguous", gap.unambiguous}}}});
    return kOk;
  }
  out << "classification: " << to_string(c.kind) << "\n";
  print_bools(out, "identifiable", c.per_state_identifiable);
  print_list(out, "state ranks", c.state_ranks);
  print_list(out, "subset ranks", c.subset_ranks);
  out << "joint rank: " << c.joint_rank << "\n";
  out << "orthogonality violation: " << c.orthogonality_violation << "\n";
  out << "linearly independent: " << (gap.linearly_independent ? "true" : "false") << "\n";
  return kOk;
}

int cmd_bounds(const InputArgs& in, std::size_t levels, const ToleranceConfig& tol, std::ostream& out) {
  const Ensemble e = read_ensemble_file(in.path, tol);
  const BoundReport b = levels == 0 ? bound_series(e, kMaxBoundLevels, tol, SeriesStop::AtConvergence)
                                    : bound_series(e, levels, tol, SeriesStop::AllLevels);
  if (in.as_json) {
    json doc = {{"schema_version", kSchemaVersion}, {"document", "bounds"}};
    json section = bounds_json(b);
    json f = json::array();
    for (Eigen::Index r = 0; r < b.fidelities.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < b.fidelities.cols(); ++c) row.push_back(sig12(b.fidelities(r, c)));
      f.push_back(std::move(row));
    }
    doc["fidelities"] = std::move(f);
    doc["bounds"] = std::move(section);
    emit_json(out, doc);
    return kOk;
  }
  for (std::size_t k = 0; k < b.levels.size(); ++k) {
    out << "level " << (k + 1) << " (m=" << b.exponents[k] << "): " << b.levels[k] << "\n";
  }
  out << "limit: " << b.limit << "\n";
  out << "converged_at: " << b.converged_at << "\n";
  return kOk;
}

int cmd_witness(const InputArgs& in, const ToleranceConfig& tol, std::ostream& out, std::ostream& err) {
  const Ensemble e = read_ensemble_file(in.path, tol);
  WitnessSet w;
  try {
    w = build_witness_povm(e, tol);
  } catch (const Error& ex) {
    if (ex.kind() != ErrorKind::ConditionFails) throw;
    err << "error: no unambiguous witness exists\n";
    for (std::size_t i : ex.indices()) {
      err << "  state " << i << ": supp(S_i) = supp(S), it lies in the other states' joint support\n";
    }
    return kIdentifiabilityError;
  }
  const DiscriminationOutcome o = evaluate_povm(e, w.povm);
  if (in.as_json) {
    json doc = {{"schema_version", kSchemaVersion}, {"document", "witness"}};
    doc["witness"] = witness_json(e, w);
    emit_json(out, doc);
    return kOk;
  }
  out << "q: " << w.scale << "\n";
  for (std::size_t i = 0; i < e.size(); ++i) {
    out << "state " << i << ": p = " << o.success_probs[i] << ", overlap = " << w.overlaps[i] << ", phi =";
    for (Eigen::Index k = 0; k < w.vectors[i].size(); ++k) {
      const Complex z = w.vectors[i](k);
      out << " (" << z.real() << "," << z.imag() << ")";
    }
    out << "\n";
  }
  out << "P0: " << o.inconclusive_prob << "\n";
  return kOk;
}

int cmd_optimize(const InputArgs& in, const OracleOptions& opt, const ToleranceConfig& tol,
                 std::ostream& out) {
  const Ensemble e = read_ensemble_file(in.path, tol);
  const OptimizationResult r = optimal_unambiguous(e, tol, opt);
  const BoundReport b = bound_series(e, kMaxBoundLevels, tol);
  std::optional<double> upper;
  if (unambiguous_condition(e, tol).all) {
    upper = evaluate_povm(e, build_witness_povm(e, tol).povm).inconclusive_prob;
  }
  const bool ok = r.p_star >= b.limit - 1e-7 && (!upper || r.p_star <= *upper + 1e-7);
  if (in.as_json) {
    json doc = {{"schema_version", kSchemaVersion}, {"document", "optimize"}};
    json section = oracle_json(e, r);
    section["sandwich"] = {{"lower", sig12(b.limit)},
                           {"upper", upper ? json(sig12(*upper)) : json(nullptr)},
                           {"satisfied", ok}};
    doc["oracle"] = std::move(section);
    doc["seeds"] = {{"oracle", opt.seed}, {"restarts", opt.restarts}};
    emit_json(out, doc);
    return kOk;
  }
  out << "status: " << to_string(r.status) << "\n";
  out << "p_star: " << r.p_star << "\n";
  out << "objective_gap: " << r.objective_gap << "\n";
  out << "iterations: " << r.iterations << "\n";
  print_list(out, "success_probs", r.success_probs);
  print_list(out, "block_dims", r.block_dims);
  out << "sandwich: P0_inf = " << b.limit << " <= p_star = " << r.p_star << " <= P0_witness = ";
  if (upper) {
    out << *upper;
  } else {
    out << "n/a";
  }
  out << (ok ? " : OK" : " : VIOLATED") << "\n";
  return kOk;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

struct GenArgs {
  std::size_t dim = 2;
  std::size_t n = 2;
  std::string ranks;
  std::uint64_t seed = 0;
  std::string priors = "uniform";
  std::string family = "generic";
  std::string fixture;
  std::string output;
};

int cmd_gen(const GenArgs& g, std::ostream& out, std::ostream& err) {
  std::optional<Ensemble> e;
  try {
    if (!g.fixture.empty()) {
      if (g.fixture != "counterexample") {
        err << "error: unknown fixture '" << g.fixture << "'\n";
        return kFlagError;
      }
      e = full_rank_counterexample();
    } else {
      GenSpec spec;
      spec.dim = g.dim;
      spec.n = g.n;
      spec.seed = g.seed;
      spec.family = g.family == "orthogonal" ? Family::Orthogonal : Family::Generic;
      if (g.family != "orthogonal" && g.family != "generic") {
        err << "error: unknown family '" << g.family << "'\n";
        return kFlagError;
      }
      for (const auto& r : split(g.ranks)) spec.ranks.push_back(std::stoul(r));
      if (g.priors != "uniform") {
        std::vector<double> p;
        for (const auto& x : split(g.priors)) p.push_back(std::stod(x));
        spec.priors = std::move(p);
      }
      e = generate(spec);
    }
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return kFlagError;
  } catch (const std::logic_error& ex) {  // stoul / stod
    err << "error: malformed number in --ranks or --priors\n";
    return kFlagError;
  }
  return write_output(g.output, write_ensemble(*e), out, err);
}

int cmd_report(const InputArgs& in, const ReportOptions& opt, const std::string& output,
               const ToleranceConfig& tol, std::ostream& out, std::ostream& err) {
  const Ensemble e = read_ensemble_file(in.path, tol);
  const json doc = build_report(e, tol, opt);
  if (in.as_json) return write_output(output, doc.dump(2) + "\n", out, err);

  std::ostringstream text;
  text << std::setprecision(12);
  const auto& cls = doc["classification"];
  text << "classification: " << cls["kind"].get<std::string>() << "\n";
  text << "identifiable:";
  for (const auto& f : cls["per_state_identifiable"]) text << (f.get<bool>() ? " true" : " false");
  text << "\n";
  const auto& b = doc["bounds"];
  text << "bound levels:";
  for (const auto& v : b["levels"]) text << ' ' << v.get<double>();
  text << "\nbound limit: " << b["limit"].get<double>() << " (converged_at " << b["converged_at"] << ")\n";
  const auto& w = doc["witness"];
  if (w["applicable"].get<bool>()) {
    text << "witness: q = " << w["q"].get<double>() << ", P0 = " << w["inconclusive_prob"].get<double>() << "\n";
  } else {
    text << "witness: inapplicable (" << w["reason"].get<std::string>() << ")\n";
  }
  const auto& o = doc["oracle"];
  if (o["applicable"].get<bool>()) {
    text << "oracle: status " << o["status"].get<std::string>() << ", p_star = " << o["p_star"].get<double>()
         << ", sandwich " << (o["sandwich"]["satisfied"].get<bool>() ? "satisfied" : "VIOLATED") << "\n";
  } else {
    text << "oracle: inapplicable (" << o["reason"].get<std::string>() << ")\n";
  }
  for (const auto& [name, chain] : doc["proof_chain"].items()) {
    text << "proof chain (" << name << "): ";
    if (chain["applicable"].get<bool>()) {
      text << (chain["holds"].get<bool>() ? "holds" : "VIOLATED") << "\n";
    } else {
      text << "inapplicable\n";
    }
  }
  return write_output(output, text.str(), out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto saved_precision = out.precision(12);
  struct Restore {
    std::ostream& s;
    std::streamsize p;
    ~Restore() { s.precision(p); }
  } restore{out, saved_precision};

  CLI::App app{"Unambiguous discrimination of quantum mixed states", "udisc"};
  app.require_subcommand(1);

  InputArgs in;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", in.path, "Ensemble file (udisc-1)")->required();
    sub->add_flag("--json", in.as_json, "Machine-readable output");
  };

  auto* classify = app.add_subcommand("classify", "Perfect / Unambiguous / NotUnambiguous");
  add_input(classify);

  std::size_t levels = 0;
  auto* bounds = app.add_subcommand("bounds", "Nested lower bounds on the inconclusive probability");
  add_input(bounds);
  bounds->add_option("--levels", levels, "Number of levels (default: until convergence, at most 64)")
      ->check(CLI::Range(std::size_t{1}, kMaxBoundLevels));

  auto* witness = app.add_subcommand("witness", "Rank-one witness POVM");
  add_input(witness);

  OracleOptions oracle;
  auto* optimize = app.add_subcommand("optimize", "Numerically optimal unambiguous POVM");
  add_input(optimize);
  auto add_oracle_flags = [&](CLI::App* sub) {
    sub->add_option("--tol", oracle.gap_tol, "Barrier duality-gap tolerance")
        ->check(CLI::Range(1e-14, 1e-2));
    sub->add_option("--iter-cap", oracle.iter_cap, "Newton steps per restart")->check(CLI::PositiveNumber);
    sub->add_option("--restarts", oracle.restarts, "Number of restarts")->check(CLI::PositiveNumber);
    sub->add_option("--seed", oracle.seed, "Seed for restart starting points");
  };
  add_oracle_flags(optimize);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a seeded ensemble file");
  gen_cmd->add_option("--dim", gen.dim, "Hilbert space dimension")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--n", gen.n, "Number of states");
  gen_cmd->add_option("--ranks", gen.ranks, "Comma-separated ranks (default: all 1)");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--priors", gen.priors, "'uniform' or comma-separated priors");
  gen_cmd->add_option("--family", gen.family, "generic | orthogonal");
  gen_cmd->add_option("--fixture", gen.fixture, "Named fixture: counterexample");
  gen_cmd->add_option("-o,--output,output", gen.output, "Output path (default: stdout)");

  ReportOptions report_opt;
  std::string report_out;
  bool no_oracle = false;
  auto* report = app.add_subcommand("report", "Full analysis document");
  add_input(report);
  add_oracle_flags(report);
  report->add_flag("--no-oracle", no_oracle, "Skip the numerical optimization");
  report->add_option("-o,--output", report_out, "Output path (default: stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFlagError;
  }

  ToleranceConfig tol;
  try {
    tol = ToleranceConfig::from_environment();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFlagError;
  }

  if (classify->parsed()) return guarded(err, [&] { return cmd_classify(in, tol, out); });
  if (bounds->parsed()) return guarded(err, [&] { return cmd_bounds(in, levels, tol, out); });
  if (witness->parsed()) return guarded(err, [&] { return cmd_witness(in, tol, out, err); });
  if (optimize->parsed()) return guarded(err, [&] { return cmd_optimize(in, oracle, tol, out); });
  if (gen_cmd->parsed()) return cmd_gen(gen, out, err);
  if (report->parsed()) {
    report_opt.oracle = oracle;
    report_opt.run_oracle = !no_oracle;
    return guarded(err, [&] { return cmd_report(in, report_opt, report_out, tol, out, err); });
  }
  return kFlagError;
}

}  // namespace udisc::cli
