#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "udisc/error.hpp"

namespace udisc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// Selects between the OpenMP kernels and their serial reference versions.
// Both produce bitwise-identical results.
enum class Execution { Serial, Parallel };

// Numerical cutoff policy shared by every module in a run.
struct ToleranceConfig {
  double rank_rel_tol = 1e-9;  // eigen/singular value cutoff relative to the largest
  double orth_tol = 1e-10;     // max |<b_i|b_j> - delta_ij| for basis checks
  double psd_tol = 1e-9;       // allowed negative eigenvalue relative to the largest

  // Throws InvalidTolerance unless every field lies in (0, 1e-2).
  void validate() const;

  // Defaults, with rank_rel_tol overridden by UDISC_RANK_TOL when set.
  static ToleranceConfig from_environment();
};

struct HermitianEig {
  RealVector eigenvalues;     // descending
  ComplexMatrix eigenvectors; // orthonormal columns, matching order
};

double frobenius(const ComplexMatrix& a);
double hermitian_asymmetry(const ComplexMatrix& a);
bool is_finite(const ComplexMatrix& a);

// Spectral decomposition of a Hermitian matrix, eigenvalues sorted descending.
// Throws NotSquare, or NotHermitian when ||a - a^H||_F > 1e-8 max(1, ||a||_F).
HermitianEig hermitian_eig(const ComplexMatrix& a);

// Principal square root of a PSD matrix. Eigenvalues in [-psd_tol*lmax, 0) and
// those below 16 d eps lmax (roundoff) are clipped to zero; anything more
// negative throws NotPsd.
ComplexMatrix psd_sqrt(const ComplexMatrix& a, const ToleranceConfig& tol);

// Sum of singular values. Equals max over unitaries U of Re Tr(U a).
double trace_norm(const ComplexMatrix& a);

// Orthonormal basis of the column span. Rank is the number of singular values
// above rank_rel_tol * sigma_max; an all-zero or column-less input spans nothing
// and yields a rows x 0 matrix.
ComplexMatrix orthonormal_range(const ComplexMatrix& columns, const ToleranceConfig& tol);

// Same as orthonormal_range, also reporting the singular values on either side
// of the cutoff so a rank decision can be audited.
struct RangeFactor {
  ComplexMatrix basis;
  double smallest_retained = 0.0;  // 0 when nothing is retained
  double largest_discarded = 0.0;  // 0 when nothing is discarded
};
RangeFactor orthonormal_range_audited(const ComplexMatrix& columns, const ToleranceConfig& tol);

// Orthonormal basis of the orthogonal complement of span(basis) in C^ambient_dim.
// Throws NotOrthonormal when basis^H basis deviates from I by more than orth_tol.
ComplexMatrix complement_basis(const ComplexMatrix& basis, std::size_t ambient_dim,
                               const ToleranceConfig& tol);

// max |(B^H B - I)_ij|
double orthonormality_defect(const ComplexMatrix& basis);

}  // namespace udisc
