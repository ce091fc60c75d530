#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "udisc/states.hpp"

namespace udisc {

inline constexpr std::size_t kDeskMaxDim = 16;
inline constexpr std::size_t kDeskMaxStates = 6;

enum class OptimizationStatus { Converged, IterationCap, Infeasible };

std::string_view to_string(OptimizationStatus status);

struct OracleOptions {
  double gap_tol = 1e-10;        // stop once the barrier duality gap m/t drops below this
  std::size_t iter_cap = 400;    // Newton steps per restart
  std::size_t restarts = 8;      // restart 0 starts at a scaled identity, the rest are seeded
  std::uint64_t seed = 0;
  Execution exec = Execution::Parallel;
};

struct OptimizationResult {
  Povm povm = Povm::zero(1, 0);
  double p_star = 1.0;            // optimal inconclusive probability estimate
  double objective_gap = 0.0;     // duality-gap bound m/t of the returned iterate
  std::size_t iterations = 0;     // Newton steps of the returned restart
  OptimizationStatus status = OptimizationStatus::Converged;
  std::vector<double> success_probs;
  std::vector<std::size_t> block_dims;  // dim of the orthocomplement of supp(S_i); 0 = forced p_i = 0
  std::size_t best_restart = 0;
  std::vector<double> restart_objectives;
};

// Maximizes sum eta_i Tr(Pi_i rho_i) over Pi_i = V_i Y_i V_i^H, Y_i PSD, with V_i
// spanning the orthocomplement of supp(S_i), subject to sum Pi_i <= I.
// The parameterization makes Tr(Pi_j rho_i) = 0 for i != j exact. Solved by a
// log-barrier path-following Newton method; every iterate is strictly feasible.
// Throws DeskScaleExceeded beyond dim 16 or 6 states.
OptimizationResult optimal_unambiguous(const Ensemble& e, const ToleranceConfig& tol,
                                       const OracleOptions& options = {});

// Two pure states with overlap s and priors eta1, eta2: optimal inconclusive
// probability 2 sqrt(eta1 eta2) s when s <= sqrt(eta_min/eta_max), otherwise
// eta_min + eta_max s^2. Throws BadPriors.
double js_two_pure_optimal(double overlap, double eta1, double eta2);

}  // namespace udisc
