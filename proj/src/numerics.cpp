#include "udisc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace udisc {

void ToleranceConfig::validate() const {
  auto check = [](double v, const char* name) {
    if (!(v > 0.0 && v < 1e-2)) {
      throw Error(ErrorKind::InvalidTolerance,
                  std::string(name) + " must lie in (0, 1e-2), got " + std::to_string(v), v);
    }
  };
  check(rank_rel_tol, "rank_rel_tol");
  check(orth_tol, "orth_tol");
  check(psd_tol, "psd_tol");
}

ToleranceConfig ToleranceConfig::from_environment() {
  ToleranceConfig tol;
  if (const char* env = std::getenv("UDISC_RANK_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0') {
      throw Error(ErrorKind::InvalidTolerance, std::string("UDISC_RANK_TOL is not a number: ") + env);
    }
    tol.rank_rel_tol = v;
  }
  tol.validate();
  return tol;
}

double frobenius(const ComplexMatrix& a) { return a.norm(); }

double hermitian_asymmetry(const ComplexMatrix& a) { return (a - a.adjoint()).norm(); }

bool is_finite(const ComplexMatrix& a) { return a.allFinite(); }

HermitianEig hermitian_eig(const ComplexMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw Error(ErrorKind::NotSquare,
                "expected a nonempty square matrix, got " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()));
  }
  const double asym = hermitian_asymmetry(a);
  if (!(asym <= 1e-8 * std::max(1.0, a.norm()))) {
    throw Error(ErrorKind::NotHermitian, "||A - A^H||_F = " + std::to_string(asym), asym);
  }
  // Symmetrize so the solver sees an exactly Hermitian input.
  const ComplexMatrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();

  const auto n = static_cast<std::size_t>(values.size());
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index l, Eigen::Index r) { return values(l) > values(r); });

  HermitianEig out;
  out.eigenvalues.resize(values.size());
  out.eigenvectors.resize(a.rows(), a.cols());
  for (std::size_t k = 0; k < n; ++k) {
    const auto idx = static_cast<Eigen::Index>(k);
    out.eigenvalues(idx) = values(order[k]);
    out.eigenvectors.col(idx) = vectors.col(order[k]);
  }
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a, const ToleranceConfig& tol) {
  const HermitianEig eig = hermitian_eig(a);
  const double lmax = eig.eigenvalues(0);
  const double lmin = eig.eigenvalues(eig.eigenvalues.size() - 1);
  const double floor = -tol.psd_tol * std::max(lmax, 0.0);
  if (lmin < floor) {
    throw Error(ErrorKind::NotPsd, "minimum eigenvalue " + std::to_string(lmin), lmin);
  }
  // Eigenvalues at the solver's roundoff level are dropped: a rank-deficient
  // input would otherwise pick up sqrt(1e-16) ~ 1e-8 garbage in its null space.
  const double noise = 16.0 * static_cast<double>(a.rows()) * std::numeric_limits<double>::epsilon() *
                       std::max(lmax, 0.0);
  RealVector roots = eig.eigenvalues.unaryExpr([noise](double v) { return v > noise ? std::sqrt(v) : 0.0; });
  ComplexMatrix s = eig.eigenvectors * roots.cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint();
  return 0.5 * (s + s.adjoint());
}

double trace_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues().sum();
}

RangeFactor orthonormal_range_audited(const ComplexMatrix& columns, const ToleranceConfig& tol) {
  RangeFactor out;
  const Eigen::Index rows = columns.rows();
  if (columns.cols() == 0) {
    out.basis.resize(rows, 0);
    return out;
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(columns, Eigen::ComputeThinU);
  const RealVector& sigma = svd.singularValues();
  const double smax = sigma.size() > 0 ? sigma(0) : 0.0;
  Eigen::Index rank = 0;
  if (smax > 0.0) {
    const double cut = tol.rank_rel_tol * smax;
    while (rank < sigma.size() && sigma(rank) > cut) ++rank;
  }
  out.basis = svd.matrixU().leftCols(rank);
  out.smallest_retained = rank > 0 ? sigma(rank - 1) : 0.0;
  out.largest_discarded = rank < sigma.size() ? sigma(rank) : 0.0;
  return out;
}

ComplexMatrix orthonormal_range(const ComplexMatrix& columns, const ToleranceConfig& tol) {
  return orthonormal_range_audited(columns, tol).basis;
}

double orthonormality_defect(const ComplexMatrix& basis) {
  if (basis.cols() == 0) return 0.0;
  const ComplexMatrix gram = basis.adjoint() * basis;
  const ComplexMatrix eye = ComplexMatrix::Identity(basis.cols(), basis.cols());
  return (gram - eye).cwiseAbs().maxCoeff();
}

ComplexMatrix complement_basis(const ComplexMatrix& basis, std::size_t ambient_dim,
                               const ToleranceConfig& tol) {
  const auto dim = static_cast<Eigen::Index>(ambient_dim);
  if (basis.cols() > 0 && basis.rows() != dim) {
    throw Error(ErrorKind::DimMismatch, "basis rows " + std::to_string(basis.rows()) +
                                            " != ambient dimension " + std::to_string(ambient_dim));
  }
  if (basis.cols() > dim) {
    throw Error(ErrorKind::NotOrthonormal, "more basis vectors than the ambient dimension");
  }
  const double defect = orthonormality_defect(basis);
  if (defect > tol.orth_tol) {
    throw Error(ErrorKind::NotOrthonormal, "max |B^H B - I| = " + std::to_string(defect), defect);
  }
  const Eigen::Index keep = dim - basis.cols();
  if (keep == 0) return ComplexMatrix(dim, 0);
  if (basis.cols() == 0) return ComplexMatrix::Identity(dim, dim);
  // The complementary projector has eigenvalue 1 on exactly the wanted subspace.
  const ComplexMatrix projector = ComplexMatrix::Identity(dim, dim) - basis * basis.adjoint();
  const HermitianEig eig = hermitian_eig(projector);
  return eig.eigenvectors.leftCols(keep);
}

}  // namespace udisc
