#include "udisc/classify.hpp"

#include <algorithm>
#include <string>

#include <omp.h>

namespace udisc {

std::string_view to_string(DistinguishabilityKind kind) {
  switch (kind) {
    case DistinguishabilityKind::Perfect: return "Perfect";
    case DistinguishabilityKind::Unambiguous: return "Unambiguous";
    case DistinguishabilityKind::NotUnambiguous: return "NotUnambiguous";
  }
  return "Unknown";
}

DistinguishabilityClass classify_ensemble(const Ensemble& e, const ToleranceConfig& tol) {
  const OrthogonalityReport ortho = is_orthogonal_family(e.states(), tol);
  const UnambiguousCondition cond = unambiguous_condition(e, tol);

  DistinguishabilityClass out;
  out.orthogonality_violation = ortho.worst_violation;
  out.joint_rank = cond.joint_rank;
  out.subset_ranks = cond.subset_ranks;
  out.per_state_identifiable = cond.flags;
  out.support_gaps.resize(e.size());
  out.state_ranks.resize(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    out.support_gaps[i] = cond.joint_rank - cond.subset_ranks[i];
    out.state_ranks[i] = support_of(e.state(i), tol).rank;
  }
  if (ortho.orthogonal) {
    out.kind = DistinguishabilityKind::Perfect;
  } else if (cond.all) {
    out.kind = DistinguishabilityKind::Unambiguous;
  } else {
    out.kind = DistinguishabilityKind::NotUnambiguous;
  }
  return out;
}

std::vector<DistinguishabilityClass> classify_batch(std::span<const Ensemble> batch,
                                                    const ToleranceConfig& tol, Execution exec) {
  std::vector<DistinguishabilityClass> out(batch.size());
  const auto count = static_cast<std::ptrdiff_t>(batch.size());
  if (exec == Execution::Serial) {
    for (std::ptrdiff_t k = 0; k < count; ++k) out[k] = classify_ensemble(batch[k], tol);
    return out;
  }
  // Exceptions must not escape an OpenMP region; the first one is rethrown.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    try {
      out[k] = classify_ensemble(batch[k], tol);
    } catch (...) {
#pragma omp critical(udisc_classify_batch)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

Povm perfect_povm(const Ensemble& e, const ToleranceConfig& tol) {
  const OrthogonalityReport ortho = is_orthogonal_family(e.states(), tol);
  if (!ortho.orthogonal) {
    throw Error(ErrorKind::NotOrthogonalFamily,
                "states " + std::to_string(ortho.worst_i) + " and " + std::to_string(ortho.worst_j) +
                    " overlap, ||rho_i rho_j||_F = " + std::to_string(ortho.worst_violation),
                ortho.worst_violation, {ortho.worst_i, ortho.worst_j});
  }
  std::vector<ComplexMatrix> elements;
  elements.reserve(e.size());
  for (const auto& rho : e.states()) elements.push_back(support_of(rho, tol).projector());
  return Povm::make(e.dim(), std::move(elements), tol);
}

double check_lemma1(const Ensemble& e, const Povm& p, const ToleranceConfig&) {
  const DiscriminationOutcome outcome = evaluate_povm(e, p);
  if (outcome.offdiag_max > 1e-10) {
    throw Error(ErrorKind::PreconditionNotMet,
                "POVM misidentifies states: max |Tr(Pi_j rho_i)| = " + std::to_string(outcome.offdiag_max),
                outcome.offdiag_max);
  }
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!(outcome.success_probs[i] > 0.0)) {
      throw Error(ErrorKind::PreconditionNotMet,
                  "state " + std::to_string(i) + " is never identified", outcome.success_probs[i], {i});
    }
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i == j) continue;
      worst = std::max(worst, (p.element(j) * e.state(i).matrix()).norm());
    }
  }
  return worst;
}

LinearIndependenceGap linear_independence_gap(const Ensemble& e, const ToleranceConfig& tol) {
  const auto n = static_cast<Eigen::Index>(e.size());
  LinearIndependenceGap out;
  out.gram.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const double v = born(e.state(i).matrix(), e.state(j).matrix());
      out.gram(i, j) = v;
      out.gram(j, i) = v;
    }
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(out.gram, Eigen::EigenvaluesOnly);
  const RealVector& ev = solver.eigenvalues();  // ascending
  const double lmax = ev(n - 1);
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (ev(k) > tol.rank_rel_tol * lmax) ++rank;
  }
  out.linearly_independent = rank == n;
  out.unambiguous = unambiguous_condition(e, tol).all;
  return out;
}

}  // namespace udisc
