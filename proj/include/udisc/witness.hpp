#pragma once

#include <vector>

#include "udisc/supports.hpp"

namespace udisc {

// Rank-one witness POVM Pi_i = q |phi_i><phi_i|.
struct WitnessSet {
  std::vector<ComplexVector> vectors;  // unit |phi_i>
  std::vector<double> overlaps;        // <phi_i|rho_i|phi_i>
  double scale = 0.0;                  // q
  Povm povm = Povm::zero(1, 0);
};

// |phi_i> is the top eigenvector of Q_i rho_i Q_i, Q_i projecting onto the
// orthocomplement of supp(S_i). Phase fixed so the largest-magnitude entry is
// real positive. Throws ConditionFails listing every i with supp(S_i) = supp(S).
std::vector<ComplexVector> witness_vectors(const Ensemble& e, const ToleranceConfig& tol);

// q = 1 / lambda_max(sum |phi_i><phi_i|), the largest common scale keeping
// Pi_0 PSD.
WitnessSet build_witness_povm(const Ensemble& e, const ToleranceConfig& tol);

}  // namespace udisc
