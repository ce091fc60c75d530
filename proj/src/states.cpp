#include "udisc/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace udisc {

namespace {

// Smallest eigenvalue and the PSD floor it is compared against.
struct PsdCheck {
  double min_eig;
  double floor;
  bool ok() const { return min_eig >= floor; }
};

PsdCheck check_psd(const ComplexMatrix& m, const ToleranceConfig& tol) {
  const HermitianEig eig = hermitian_eig(m);
  const double lmax = eig.eigenvalues(0);
  const double lmin = eig.eigenvalues(eig.eigenvalues.size() - 1);
  return {lmin, -tol.psd_tol * std::max(lmax, 0.0)};
}

}  // namespace

DensityMatrix DensityMatrix::validate(const ComplexMatrix& m, const ToleranceConfig& tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorKind::NotSquare, "density matrix must be square, got " +
                                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (!m.allFinite()) {
    throw Error(ErrorKind::NotHermitian, "matrix has non-finite entries");
  }
  const PsdCheck psd = check_psd(m, tol);  // also rejects non-Hermitian input
  if (!psd.ok()) {
    throw Error(ErrorKind::NotPsd, "eigenvalue " + std::to_string(psd.min_eig) + " below floor",
                psd.min_eig);
  }
  const double trace = m.trace().real();
  if (std::abs(trace - 1.0) > 1e-8) {
    throw Error(ErrorKind::TraceNotOne, "trace is " + std::to_string(trace), trace);
  }
  return DensityMatrix(0.5 * (m + m.adjoint()));
}

Ensemble Ensemble::make(std::vector<DensityMatrix> states, std::vector<double> priors) {
  if (states.size() < 2) {
    throw Error(ErrorKind::InvalidEnsemble, "an ensemble needs at least two states");
  }
  if (priors.size() != states.size()) {
    throw Error(ErrorKind::CountMismatch, std::to_string(priors.size()) + " priors for " +
                                              std::to_string(states.size()) + " states");
  }
  const std::size_t dim = states.front().dim();
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].dim() != dim) {
      throw Error(ErrorKind::DimMismatch, "state " + std::to_string(i) + " has dimension " +
                                              std::to_string(states[i].dim()),
                  0.0, {i});
    }
  }
  for (std::size_t i = 0; i < priors.size(); ++i) {
    if (!(priors[i] > 0.0) || !std::isfinite(priors[i])) {
      throw Error(ErrorKind::BadPriors, "prior " + std::to_string(i) + " must be positive",
                  priors[i], {i});
    }
  }
  const double total = std::accumulate(priors.begin(), priors.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-10) {
    throw Error(ErrorKind::BadPriors, "priors sum to " + std::to_string(total), total);
  }
  return Ensemble(std::move(states), std::move(priors));
}

Ensemble Ensemble::conjugated(const ComplexMatrix& u, const ToleranceConfig& tol) const {
  std::vector<DensityMatrix> out;
  out.reserve(states_.size());
  for (const auto& s : states_) {
    out.push_back(DensityMatrix::validate(u * s.matrix() * u.adjoint(), tol));
  }
  return make(std::move(out), priors_);
}

Povm Povm::make(std::size_t dim, std::vector<ComplexMatrix> elements, const ToleranceConfig& tol) {
  const auto d = static_cast<Eigen::Index>(dim);
  if (dim == 0) throw Error(ErrorKind::DimMismatch, "POVM dimension must be positive");
  ComplexMatrix total = ComplexMatrix::Zero(d, d);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    auto& el = elements[i];
    if (el.rows() != d || el.cols() != d) {
      throw Error(ErrorKind::DimMismatch, "element " + std::to_string(i + 1) + " is not " +
                                              std::to_string(dim) + "x" + std::to_string(dim),
                  0.0, {i});
    }
    const double asym = hermitian_asymmetry(el);
    if (asym > 1e-8 * std::max(1.0, el.norm())) {
      throw Error(ErrorKind::InvalidPovm, "element " + std::to_string(i + 1) + " is not Hermitian",
                  asym, {i});
    }
    el = 0.5 * (el + el.adjoint());
    const PsdCheck psd = check_psd(el, tol);
    if (!psd.ok()) {
      throw Error(ErrorKind::InvalidPovm,
                  "element " + std::to_string(i + 1) + " has eigenvalue " + std::to_string(psd.min_eig),
                  psd.min_eig, {i});
    }
    total += el;
  }
  const ComplexMatrix slack = ComplexMatrix::Identity(d, d) - total;
  const HermitianEig eig = hermitian_eig(slack);
  const double lmin = eig.eigenvalues(eig.eigenvalues.size() - 1);
  // Pi_0 PSD relative to the identity's scale.
  if (lmin < -tol.psd_tol) {
    throw Error(ErrorKind::InvalidPovm, "I - sum Pi_i has eigenvalue " + std::to_string(lmin), lmin);
  }
  return Povm(dim, std::move(elements));
}

Povm Povm::zero(std::size_t dim, std::size_t count) {
  const auto d = static_cast<Eigen::Index>(dim);
  return Povm(dim, std::vector<ComplexMatrix>(count, ComplexMatrix::Zero(d, d)));
}

ComplexMatrix Povm::inconclusive() const {
  const auto d = static_cast<Eigen::Index>(dim_);
  ComplexMatrix out = ComplexMatrix::Identity(d, d);
  for (const auto& el : elements_) out -= el;
  return out;
}

double born(const ComplexMatrix& a, const ComplexMatrix& b) {
  // Tr(ab) = sum_ij a_ij b_ji
  return (a.transpose().cwiseProduct(b)).sum().real();
}

DiscriminationOutcome evaluate_povm(const Ensemble& e, const Povm& p) {
  if (p.dim() != e.dim()) {
    throw Error(ErrorKind::DimMismatch, "POVM dimension " + std::to_string(p.dim()) +
                                            " != ensemble dimension " + std::to_string(e.dim()));
  }
  if (p.size() != e.size()) {
    throw Error(ErrorKind::CountMismatch, std::to_string(p.size()) + " POVM elements for " +
                                              std::to_string(e.size()) + " states");
  }
  const std::size_t n = e.size();
  const auto ni = static_cast<Eigen::Index>(n);
  const ComplexMatrix pi0 = p.inconclusive();

  DiscriminationOutcome out;
  out.outcome_table = RealMatrix::Zero(ni, ni + 1);
  out.success_probs.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& rho = e.state(i).matrix();
    const auto ii = static_cast<Eigen::Index>(i);
    out.outcome_table(ii, 0) = born(pi0, rho);
    out.inconclusive_prob += e.prior(i) * out.outcome_table(ii, 0);
    for (std::size_t j = 0; j < n; ++j) {
      const double v = born(p.element(j), rho);
      out.outcome_table(ii, static_cast<Eigen::Index>(j) + 1) = v;
      if (i == j) {
        out.success_probs[i] = v;
      } else {
        out.offdiag_max = std::max(out.offdiag_max, std::abs(v));
      }
    }
  }
  return out;
}

}  // namespace udisc
