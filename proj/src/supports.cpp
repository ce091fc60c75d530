#include "udisc/supports.hpp"

#include <algorithm>
#include <string>

namespace udisc {

SupportSubspace support_of(const DensityMatrix& rho, const ToleranceConfig& tol) {
  const HermitianEig eig = hermitian_eig(rho.matrix());
  const Eigen::Index d = eig.eigenvalues.size();
  const double lmax = eig.eigenvalues(0);
  Eigen::Index rank = 0;
  if (lmax > 0.0) {
    const double cut = tol.rank_rel_tol * lmax;
    while (rank < d && eig.eigenvalues(rank) > cut) ++rank;
  }
  SupportSubspace out;
  out.ambient_dim = rho.dim();
  out.basis = eig.eigenvectors.leftCols(rank);
  out.rank = static_cast<std::size_t>(rank);
  out.smallest_retained = rank > 0 ? eig.eigenvalues(rank - 1) : 0.0;
  out.largest_discarded = rank < d ? std::max(eig.eigenvalues(rank), 0.0) : 0.0;
  return out;
}

SupportSubspace joint_support(std::span<const DensityMatrix> states, const ToleranceConfig& tol) {
  if (states.empty()) throw Error(ErrorKind::EmptySet, "joint support of an empty set");
  const std::size_t dim = states.front().dim();
  std::vector<SupportSubspace> parts;
  parts.reserve(states.size());
  Eigen::Index total = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].dim() != dim) {
      throw Error(ErrorKind::DimMismatch, "state " + std::to_string(i) + " has dimension " +
                                              std::to_string(states[i].dim()),
                  0.0, {i});
    }
    parts.push_back(support_of(states[i], tol));
    total += parts.back().basis.cols();
  }
  if (states.size() == 1) return parts.front();

  ComplexMatrix stacked(static_cast<Eigen::Index>(dim), total);
  Eigen::Index col = 0;
  for (const auto& p : parts) {
    stacked.middleCols(col, p.basis.cols()) = p.basis;
    col += p.basis.cols();
  }
  const RangeFactor range = orthonormal_range_audited(stacked, tol);
  SupportSubspace out;
  out.ambient_dim = dim;
  out.basis = range.basis;
  out.rank = static_cast<std::size_t>(range.basis.cols());
  out.smallest_retained = range.smallest_retained;
  out.largest_discarded = range.largest_discarded;
  return out;
}

SupportSubspace joint_support_excluding(const Ensemble& e, std::size_t excluded,
                                        const ToleranceConfig& tol) {
  std::vector<DensityMatrix> rest;
  rest.reserve(e.size() - 1);
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (j != excluded) rest.push_back(e.state(j));
  }
  return joint_support(rest, tol);
}

OrthogonalityReport is_orthogonal_family(std::span<const DensityMatrix> states,
                                         const ToleranceConfig&) {
  OrthogonalityReport out;
  if (states.empty()) return out;
  const std::size_t dim = states.front().dim();
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].dim() != dim) {
      throw Error(ErrorKind::DimMismatch, "state " + std::to_string(i) + " has dimension " +
                                              std::to_string(states[i].dim()),
                  0.0, {i});
    }
  }
  double worst_ratio = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      const auto& a = states[i].matrix();
      const auto& b = states[j].matrix();
      const double v = (a * b).norm();
      const double scale = std::max(1.0, a.norm() * b.norm());
      if (v > out.worst_violation) {
        out.worst_violation = v;
        out.worst_i = i;
        out.worst_j = j;
      }
      worst_ratio = std::max(worst_ratio, v / scale);
    }
  }
  out.orthogonal = worst_ratio <= 1e-8;
  return out;
}

UnambiguousCondition unambiguous_condition(const Ensemble& e, const ToleranceConfig& tol) {
  UnambiguousCondition out;
  out.joint_rank = joint_support(e.states(), tol).rank;
  out.flags.resize(e.size());
  out.subset_ranks.resize(e.size());
  out.all = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    out.subset_ranks[i] = joint_support_excluding(e, i, tol).rank;
    out.flags[i] = out.joint_rank > out.subset_ranks[i];
    out.all = out.all && out.flags[i];
  }
  return out;
}

}  // namespace udisc
