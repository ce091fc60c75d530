#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "udisc/supports.hpp"

namespace udisc {

enum class DistinguishabilityKind { Perfect, Unambiguous, NotUnambiguous };

std::string_view to_string(DistinguishabilityKind kind);

struct DistinguishabilityClass {
  DistinguishabilityKind kind = DistinguishabilityKind::NotUnambiguous;
  // State i admits an identification with positive probability and no error.
  std::vector<bool> per_state_identifiable;
  double orthogonality_violation = 0.0;
  std::size_t joint_rank = 0;
  std::vector<std::size_t> subset_ranks;
  std::vector<std::size_t> state_ranks;
  // rank supp(S) - rank supp(S_i)
  std::vector<std::size_t> support_gaps;
};

// Perfect iff the states are mutually orthogonal; otherwise Unambiguous iff
// every supp(S_i) is strictly smaller than supp(S).
DistinguishabilityClass classify_ensemble(const Ensemble& e, const ToleranceConfig& tol);

// Classifies each ensemble independently. The parallel path distributes
// ensembles over OpenMP threads; output order always follows the input.
std::vector<DistinguishabilityClass> classify_batch(std::span<const Ensemble> batch,
                                                    const ToleranceConfig& tol,
                                                    Execution exec = Execution::Parallel);

// Projectors onto each supp(rho_i). Throws NotOrthogonalFamily unless the
// ensemble classifies as Perfect.
Povm perfect_povm(const Ensemble& e, const ToleranceConfig& tol);

// max_{i != j} ||Pi_j rho_i||_F for a POVM that unambiguously discriminates e.
// Throws PreconditionNotMet unless offdiag_max <= 1e-10 and every p_i > 0.
double check_lemma1(const Ensemble& e, const Povm& p, const ToleranceConfig& tol);

struct LinearIndependenceGap {
  bool linearly_independent = false;
  bool unambiguous = false;
  RealMatrix gram;  // Tr(rho_i rho_j)
};

LinearIndependenceGap linear_independence_gap(const Ensemble& e, const ToleranceConfig& tol);

}  // namespace udisc
