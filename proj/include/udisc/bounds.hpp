#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "udisc/states.hpp"

namespace udisc {

// F(a, b) = || sqrt(a) sqrt(b) ||_1. Throws DimMismatch.
double fidelity(const DensityMatrix& a, const DensityMatrix& b, const ToleranceConfig& tol);

// Symmetric n x n matrix of pairwise fidelities. The parallel path spreads the
// square roots and the upper-triangle pairs over OpenMP threads; every entry is
// computed by the same sequence of operations in both paths.
RealMatrix fidelity_matrix(const Ensemble& e, const ToleranceConfig& tol,
                           Execution exec = Execution::Parallel);

// C_k = sum_{i != j} (eta_i eta_j F_ij^2)^k over ordered pairs.
double coefficient_c(std::span<const double> priors, std::uint64_t k, const RealMatrix& fidelities);
double coefficient_c(const Ensemble& e, std::uint64_t k, const RealMatrix& fidelities);

inline constexpr std::size_t kMaxBoundLevels = 64;
inline constexpr double kSeriesConvergence = 1e-12;

struct BoundReport {
  RealMatrix fidelities;
  std::vector<std::uint64_t> exponents;  // m_j = 1, 2, 4, ..., 2^(j-1)
  std::vector<double> coefficients;      // C_{m_j}; deep terms may underflow to 0
  std::vector<double> levels;            // P0^(1), P0^(2), ...
  double limit = 0.0;                    // P0^(inf) estimate
  std::size_t converged_at = 0;          // first level within 1e-12 of its predecessor, 0 if none
};

enum class SeriesStop { AtConvergence, AllLevels };

// Nested-radical lower bounds on the inconclusive probability,
//   P0^(k) = sqrt(C_1 + sqrt(C_2 + sqrt(C_4 + ... + sqrt(n/(n-1) C_{2^(k-1)})))).
// max_level is capped at 64. With AtConvergence the series stops at the first
// level whose increment is below 1e-12.
BoundReport bound_series(const Ensemble& e, std::size_t max_level, const ToleranceConfig& tol,
                         SeriesStop stop = SeriesStop::AtConvergence);

BoundReport bound_series_from_fidelities(std::span<const double> priors, const RealMatrix& fidelities,
                                         std::size_t max_level,
                                         SeriesStop stop = SeriesStop::AtConvergence);

// Slack of each inequality in the lower-bound derivation, evaluated on a
// concrete POVM. Nonnegative (up to the stated tolerances) for every POVM that
// unambiguously discriminates the ensemble.
struct ProofChainSlacks {
  std::vector<double> inconclusive_per_state;  // t_i = Tr(Pi_0 rho_i)
  double pairwise = 0.0;                 // min_{i != j} t_i t_j - F_ij^2, tolerance -1e-8
  std::vector<std::uint64_t> cauchy_k;   // {1, 2, 4}
  std::vector<double> cauchy;            // A_k - B_k/(n-1), tolerance -1e-10
  double levels = 0.0;                   // min_k P_0 - P0^(k), tolerance -1e-8
  double inconclusive_prob = 0.0;
  BoundReport bounds;

  bool holds() const;
};

inline constexpr double kPairwiseSlackTol = 1e-8;
inline constexpr double kCauchySlackTol = 1e-10;
inline constexpr double kLevelSlackTol = 1e-8;

// Throws PreconditionNotMet unless offdiag_max <= 1e-10 and every p_i > 0.
ProofChainSlacks verify_proof_chain(const Ensemble& e, const Povm& p, const ToleranceConfig& tol);

}  // namespace udisc
