#include "udisc/witness.hpp"

#include <string>

namespace udisc {

namespace {

void fix_phase(ComplexVector& v) {
  Eigen::Index at = 0;
  v.cwiseAbs().maxCoeff(&at);
  const double mag = std::abs(v(at));
  if (mag > 0.0) v *= std::conj(v(at)) / mag;
}

}  // namespace

std::vector<ComplexVector> witness_vectors(const Ensemble& e, const ToleranceConfig& tol) {
  const UnambiguousCondition cond = unambiguous_condition(e, tol);
  if (!cond.all) {
    std::vector<std::size_t> failing;
    std::string names;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!cond.flags[i]) {
        failing.push_back(i);
        names += (names.empty() ? "" : ", ") + std::to_string(i);
      }
    }
    throw Error(ErrorKind::ConditionFails, "supp(S_i) = supp(S) for state(s) " + names, 0.0,
                std::move(failing));
  }
  std::vector<ComplexVector> out;
  out.reserve(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const SupportSubspace others = joint_support_excluding(e, i, tol);
    const ComplexMatrix v = complement_basis(others.basis, e.dim(), tol);
    // Compress rho_i onto the complement and take its dominant direction.
    const ComplexMatrix compressed = v.adjoint() * e.state(i).matrix() * v;
    const HermitianEig eig = hermitian_eig(compressed);
    ComplexVector phi = v * eig.eigenvectors.col(0);
    phi.normalize();
    fix_phase(phi);
    out.push_back(std::move(phi));
  }
  return out;
}

WitnessSet build_witness_povm(const Ensemble& e, const ToleranceConfig& tol) {
  WitnessSet out;
  out.vectors = witness_vectors(e, tol);
  const auto d = static_cast<Eigen::Index>(e.dim());
  ComplexMatrix gram = ComplexMatrix::Zero(d, d);
  for (const auto& phi : out.vectors) gram += phi * phi.adjoint();
  const double lmax = hermitian_eig(gram).eigenvalues(0);
  out.scale = 1.0 / lmax;

  std::vector<ComplexMatrix> elements;
  elements.reserve(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto& phi = out.vectors[i];
    out.overlaps.push_back((phi.adjoint() * e.state(i).matrix() * phi)(0).real());
    elements.push_back(out.scale * (phi * phi.adjoint()));
  }
  out.povm = Povm::make(e.dim(), std::move(elements), tol);
  return out;
}

}  // namespace udisc
