#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "udisc/numerics.hpp"

namespace udisc {

// Hermitian, PSD, unit-trace matrix. Only obtainable through validate().
class DensityMatrix {
 public:
  // Throws NotSquare, NotHermitian, NotPsd (worst eigenvalue in measured()) or
  // TraceNotOne (measured trace in measured()).
  static DensityMatrix validate(const ComplexMatrix& m, const ToleranceConfig& tol);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

// n >= 2 states of one dimension with strictly positive priors summing to 1.
class Ensemble {
 public:
  // Priors are checked, never renormalized. Throws InvalidEnsemble, DimMismatch
  // or BadPriors.
  static Ensemble make(std::vector<DensityMatrix> states, std::vector<double> priors);

  std::size_t size() const noexcept { return states_.size(); }
  std::size_t dim() const noexcept { return states_.front().dim(); }
  const std::vector<DensityMatrix>& states() const noexcept { return states_; }
  const DensityMatrix& state(std::size_t i) const { return states_.at(i); }
  const std::vector<double>& priors() const noexcept { return priors_; }
  double prior(std::size_t i) const { return priors_.at(i); }

  // Same priors, every state replaced by u rho u^H.
  Ensemble conjugated(const ComplexMatrix& u, const ToleranceConfig& tol) const;

 private:
  Ensemble(std::vector<DensityMatrix> s, std::vector<double> p)
      : states_(std::move(s)), priors_(std::move(p)) {}
  std::vector<DensityMatrix> states_;
  std::vector<double> priors_;
};

// Conclusive elements Pi_1..Pi_n. The inconclusive element Pi_0 = I - sum Pi_i
// is always derived.
class Povm {
 public:
  // Throws InvalidPovm when an element is not Hermitian PSD or I - sum is not PSD
  // (within psd_tol), DimMismatch on shape errors.
  static Povm make(std::size_t dim, std::vector<ComplexMatrix> elements, const ToleranceConfig& tol);

  // All-zero POVM: every outcome is inconclusive.
  static Povm zero(std::size_t dim, std::size_t count);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<ComplexMatrix>& elements() const noexcept { return elements_; }
  const ComplexMatrix& element(std::size_t i) const { return elements_.at(i); }
  ComplexMatrix inconclusive() const;

 private:
  Povm(std::size_t d, std::vector<ComplexMatrix> e) : dim_(d), elements_(std::move(e)) {}
  std::size_t dim_;
  std::vector<ComplexMatrix> elements_;
};

struct DiscriminationOutcome {
  std::vector<double> success_probs;  // p_i = Tr(Pi_i rho_i)
  double inconclusive_prob = 0.0;     // P_0 = sum eta_i Tr(Pi_0 rho_i)
  double offdiag_max = 0.0;           // max_{i != j} |Tr(Pi_j rho_i)|
  RealMatrix outcome_table;           // (i, j) = Re Tr(Pi_j rho_i), j = 0 is Pi_0
};

// Born-rule pairing Re Tr(a b) for Hermitian a, b.
double born(const ComplexMatrix& a, const ComplexMatrix& b);

// Throws DimMismatch or CountMismatch.
DiscriminationOutcome evaluate_povm(const Ensemble& e, const Povm& p);

}  // namespace udisc
