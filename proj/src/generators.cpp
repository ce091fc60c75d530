#include "udisc/generators.hpp"

#include <numeric>
#include <string>

namespace udisc {

namespace {

const ToleranceConfig kGenTol{};

void check_rank(std::size_t dim, std::size_t rank) {
  if (rank < 1 || rank > dim) {
    throw Error(ErrorKind::BadRank, "rank " + std::to_string(rank) + " outside [1, " +
                                        std::to_string(dim) + "]",
                static_cast<double>(rank));
  }
}

DensityMatrix normalized_gram(const ComplexMatrix& g) {
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix::validate(0.5 * (rho + rho.adjoint()), kGenTol);
}

}  // namespace

DensityMatrix random_density(std::size_t dim, std::size_t rank, Rng& rng) {
  check_rank(dim, rank);
  return normalized_gram(rng.ginibre(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(rank)));
}

DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(dim, rank, rng);
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  const auto d = static_cast<Eigen::Index>(dim);
  const ComplexMatrix g = rng.ginibre(d, d);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the column phases so the distribution is Haar.
  for (Eigen::Index k = 0; k < d; ++k) {
    const Complex diag = r(k, k);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(k) *= diag / mag;
  }
  return q;
}

namespace {

DensityMatrix normalized(const ComplexMatrix& m) {
  ComplexMatrix rho = m / m.trace().real();
  return DensityMatrix::validate(0.5 * (rho + rho.adjoint()), kGenTol);
}

std::vector<DensityMatrix> orthogonal_family(std::size_t dim, std::span<const std::size_t> ranks,
                                             Rng& rng) {
  const std::size_t total = std::accumulate(ranks.begin(), ranks.end(), std::size_t{0});
  if (total > dim) {
    throw Error(ErrorKind::RanksExceedDim, "ranks sum to " + std::to_string(total) + " > dim " +
                                               std::to_string(dim),
                static_cast<double>(total));
  }
  for (std::size_t r : ranks) check_rank(dim, r);
  const auto d = static_cast<Eigen::Index>(dim);
  std::vector<ComplexMatrix> blocks;
  Eigen::Index start = 0;
  for (std::size_t r : ranks) {
    const auto ri = static_cast<Eigen::Index>(r);
    const ComplexMatrix g = rng.ginibre(ri, ri);
    ComplexMatrix rho = ComplexMatrix::Zero(d, d);
    rho.block(start, start, ri, ri) = g * g.adjoint();
    blocks.push_back(std::move(rho));
    start += ri;
  }
  const ComplexMatrix u = random_unitary(dim, rng);
  std::vector<DensityMatrix> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) out.push_back(normalized(u * b * u.adjoint()));
  return out;
}

std::vector<double> resolve_priors(const GenSpec& spec) {
  if (!spec.priors) return std::vector<double>(spec.n, 1.0 / static_cast<double>(spec.n));
  if (spec.priors->size() != spec.n) {
    throw Error(ErrorKind::BadPriors, std::to_string(spec.priors->size()) + " priors for " +
                                          std::to_string(spec.n) + " states");
  }
  return *spec.priors;
}

}  // namespace

std::vector<DensityMatrix> orthogonal_family(std::size_t dim, std::span<const std::size_t> ranks,
                                             std::uint64_t seed) {
  Rng rng(seed);
  return orthogonal_family(dim, ranks, rng);
}

Ensemble generate(const GenSpec& spec) {
  if (spec.n < 2) throw Error(ErrorKind::InvalidEnsemble, "need at least two states");
  if (spec.dim < 1) throw Error(ErrorKind::BadRank, "dimension must be positive");
  std::vector<std::size_t> ranks = spec.ranks;
  if (ranks.empty()) ranks.assign(spec.n, 1);
  if (ranks.size() != spec.n) {
    throw Error(ErrorKind::BadRank, std::to_string(ranks.size()) + " ranks for " +
                                        std::to_string(spec.n) + " states");
  }
  std::vector<double> priors = resolve_priors(spec);
  Rng rng(spec.seed);
  std::vector<DensityMatrix> states;
  if (spec.family == Family::Orthogonal) {
    states = orthogonal_family(spec.dim, ranks, rng);
  } else {
    for (std::size_t r : ranks) states.push_back(random_density(spec.dim, r, rng));
  }
  return Ensemble::make(std::move(states), std::move(priors));
}

Ensemble full_rank_counterexample() {
  ComplexMatrix a = ComplexMatrix::Identity(2, 2) / 2.0;
  ComplexMatrix b = ComplexMatrix::Zero(2, 2);
  b(0, 0) = 1.0 / 3.0;
  b(1, 1) = 2.0 / 3.0;
  std::vector<DensityMatrix> states{DensityMatrix::validate(a, kGenTol),
                                    DensityMatrix::validate(b, kGenTol)};
  return Ensemble::make(std::move(states), {0.5, 0.5});
}

}  // namespace udisc
