#include "udisc/report.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "udisc/ensemble_io.hpp"

namespace udisc {

using nlohmann::json;

double sig12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no negative zero in output
}

namespace {

json rounded(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(sig12(x));
  return out;
}

json rounded(const RealMatrix& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(sig12(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json rounded(const ComplexMatrix& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back({sig12(m(r, c).real()), sig12(m(r, c).imag())});
    }
    out.push_back(std::move(row));
  }
  return out;
}

json rounded(const ComplexVector& v) {
  json out = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back({sig12(v(k).real()), sig12(v(k).imag())});
  return out;
}

json povm_json(const Povm& p) {
  json out = json::array();
  for (const auto& el : p.elements()) out.push_back(rounded(el));
  return out;
}

json bools(const std::vector<bool>& v) {
  json out = json::array();
  for (bool b : v) out.push_back(b);
  return out;
}

json outcome_json(const DiscriminationOutcome& o) {
  return {{"success_probs", rounded(o.success_probs)},
          {"inconclusive_prob", sig12(o.inconclusive_prob)},
          {"offdiag_max", sig12(o.offdiag_max)}};
}

json inapplicable(const std::string& reason) { return {{"applicable", false}, {"reason", reason}}; }

json chain_or_reason(const Ensemble& e, const Povm& p, const ToleranceConfig& tol) {
  try {
    return slacks_json(verify_proof_chain(e, p, tol));
  } catch (const Error& err) {
    return inapplicable(err.what());
  }
}

}  // namespace

json classification_json(const DistinguishabilityClass& c) {
  return {{"kind", std::string(to_string(c.kind))},
          {"per_state_identifiable", bools(c.per_state_identifiable)},
          {"orthogonality_violation", sig12(c.orthogonality_violation)},
          {"joint_rank", c.joint_rank},
          {"subset_ranks", c.subset_ranks},
          {"state_ranks", c.state_ranks},
          {"support_gaps", c.support_gaps}};
}

json bounds_json(const BoundReport& b) {
  return {{"exponents", b.exponents},
          {"coefficients", rounded(b.coefficients)},
          {"levels", rounded(b.levels)},
          {"limit", sig12(b.limit)},
          {"converged_at", b.converged_at}};
}

json witness_json(const Ensemble& e, const WitnessSet& w) {
  json vectors = json::array();
  for (const auto& v : w.vectors) vectors.push_back(rounded(v));
  const DiscriminationOutcome o = evaluate_povm(e, w.povm);
  json out = {{"applicable", true},
              {"q", sig12(w.scale)},
              {"vectors", std::move(vectors)},
              {"overlaps", rounded(w.overlaps)},
              {"povm", povm_json(w.povm)}};
  out.update(outcome_json(o));
  return out;
}

json oracle_json(const Ensemble& e, const OptimizationResult& r) {
  const DiscriminationOutcome o = evaluate_povm(e, r.povm);
  return {{"applicable", true},
          {"status", std::string(to_string(r.status))},
          {"p_star", sig12(r.p_star)},
          {"objective_gap", sig12(r.objective_gap)},
          {"iterations", r.iterations},
          {"best_restart", r.best_restart},
          {"block_dims", r.block_dims},
          {"success_probs", rounded(r.success_probs)},
          {"offdiag_max", sig12(o.offdiag_max)},
          {"povm", povm_json(r.povm)}};
}

json slacks_json(const ProofChainSlacks& s) {
  return {{"applicable", true},
          {"holds", s.holds()},
          {"inconclusive_per_state", rounded(s.inconclusive_per_state)},
          {"inconclusive_prob", sig12(s.inconclusive_prob)},
          {"pairwise", sig12(s.pairwise)},
          {"cauchy_k", s.cauchy_k},
          {"cauchy", rounded(s.cauchy)},
          {"levels", sig12(s.levels)}};
}

json tolerances_json(const ToleranceConfig& tol) {
  return {{"rank_rel_tol", tol.rank_rel_tol}, {"orth_tol", tol.orth_tol}, {"psd_tol", tol.psd_tol}};
}

json build_report(const Ensemble& e, const ToleranceConfig& tol, const ReportOptions& options) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["document"] = "report";
  doc["tolerances"] = tolerances_json(tol);
  doc["seeds"] = {{"oracle", options.oracle.seed}, {"restarts", options.oracle.restarts}};

  const DistinguishabilityClass cls = classify_ensemble(e, tol);
  doc["classification"] = classification_json(cls);
  const LinearIndependenceGap gap = linear_independence_gap(e, tol);
  doc["linear_independence"] = {{"linearly_independent", gap.linearly_independent},
                                {"unambiguous", gap.unambiguous}};

  const BoundReport bounds = bound_series(e, options.levels, tol, options.stop);
  doc["fidelities"] = rounded(bounds.fidelities);
  doc["bounds"] = bounds_json(bounds);

  json chains = json::object();
  std::optional<double> witness_p0;
  if (cls.kind == DistinguishabilityKind::Perfect) {
    const Povm perfect = perfect_povm(e, tol);
    json section = {{"applicable", true}, {"povm", povm_json(perfect)}};
    section.update(outcome_json(evaluate_povm(e, perfect)));
    doc["perfect"] = std::move(section);
    chains["perfect"] = chain_or_reason(e, perfect, tol);
  } else {
    doc["perfect"] = inapplicable("states are not mutually orthogonal");
  }

  if (cls.kind != DistinguishabilityKind::NotUnambiguous) {
    const WitnessSet w = build_witness_povm(e, tol);
    doc["witness"] = witness_json(e, w);
    witness_p0 = evaluate_povm(e, w.povm).inconclusive_prob;
    chains["witness"] = chain_or_reason(e, w.povm, tol);
  } else {
    std::string names;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!cls.per_state_identifiable[i]) names += (names.empty() ? "" : ", ") + std::to_string(i);
    }
    doc["witness"] = inapplicable("supp(S_i) = supp(S) for state(s) " + names);
  }

  if (!options.run_oracle) {
    doc["oracle"] = inapplicable("disabled");
  } else if (cls.kind == DistinguishabilityKind::NotUnambiguous) {
    doc["oracle"] = inapplicable("ensemble is not unambiguously distinguishable");
  } else if (e.dim() > kDeskMaxDim || e.size() > kDeskMaxStates) {
    doc["oracle"] = inapplicable("DeskScaleExceeded");
  } else {
    const OptimizationResult r = optimal_unambiguous(e, tol, options.oracle);
    json section = oracle_json(e, r);
    const bool lower_ok = r.p_star >= bounds.limit - 1e-7;
    const bool upper_ok = !witness_p0 || r.p_star <= *witness_p0 + 1e-7;
    section["sandwich"] = {{"lower", sig12(bounds.limit)},
                           {"upper", witness_p0 ? json(sig12(*witness_p0)) : json(nullptr)},
                           {"satisfied", lower_ok && upper_ok}};
    doc["oracle"] = std::move(section);
    if (r.status != OptimizationStatus::Infeasible) chains["oracle"] = chain_or_reason(e, r.povm, tol);
  }
  doc["proof_chain"] = std::move(chains);
  doc["ensemble"] = ensemble_to_json(e);
  return doc;
}

}  // namespace udisc
