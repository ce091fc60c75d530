#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "udisc/states.hpp"

namespace udisc {

// Orthonormal basis of a support space. The two audit values bracket the rank
// cutoff: smallest kept and largest dropped eigen/singular value.
struct SupportSubspace {
  std::size_t ambient_dim = 0;
  ComplexMatrix basis;  // ambient_dim x rank
  std::size_t rank = 0;
  double smallest_retained = 0.0;
  double largest_discarded = 0.0;

  ComplexMatrix projector() const { return basis * basis.adjoint(); }
};

SupportSubspace support_of(const DensityMatrix& rho, const ToleranceConfig& tol);

// Span of the union of the states' supports. Throws EmptySet or DimMismatch.
SupportSubspace joint_support(std::span<const DensityMatrix> states, const ToleranceConfig& tol);

struct OrthogonalityReport {
  bool orthogonal = true;
  std::size_t worst_i = 0;
  std::size_t worst_j = 0;
  double worst_violation = 0.0;  // max_{i != j} ||rho_i rho_j||_F
};

// Pairwise ||rho_i rho_j||_F <= 1e-8 max(1, ||rho_i||_F ||rho_j||_F).
OrthogonalityReport is_orthogonal_family(std::span<const DensityMatrix> states,
                                         const ToleranceConfig& tol);

struct UnambiguousCondition {
  std::vector<bool> flags;               // flag_i: supp(S_i) is strictly inside supp(S)
  bool all = false;
  std::size_t joint_rank = 0;            // rank supp(S)
  std::vector<std::size_t> subset_ranks; // rank supp(S_i)
};

UnambiguousCondition unambiguous_condition(const Ensemble& e, const ToleranceConfig& tol);

// Joint support of every state except `excluded`.
SupportSubspace joint_support_excluding(const Ensemble& e, std::size_t excluded,
                                        const ToleranceConfig& tol);

}  // namespace udisc
