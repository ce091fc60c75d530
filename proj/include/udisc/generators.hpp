#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "udisc/rng.hpp"
#include "udisc/states.hpp"

namespace udisc {

enum class Family { Generic, Orthogonal };

struct GenSpec {
  std::size_t dim = 2;
  std::size_t n = 2;
  std::vector<std::size_t> ranks;  // one per state; empty means all rank 1
  std::uint64_t seed = 0;
  std::optional<std::vector<double>> priors;  // nullopt = uniform
  Family family = Family::Generic;
};

// rho = G G^H / Tr(G G^H), G a dim x rank standard complex Ginibre matrix
// drawn from Rng(seed). Throws BadRank unless 1 <= rank <= dim.
DensityMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed);
DensityMatrix random_density(std::size_t dim, std::size_t rank, Rng& rng);

// Haar-distributed unitary from the QR decomposition of a Ginibre matrix.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

// Full-rank random states on disjoint coordinate blocks of sizes `ranks`,
// rotated by one common random unitary. Throws RanksExceedDim.
std::vector<DensityMatrix> orthogonal_family(std::size_t dim, std::span<const std::size_t> ranks,
                                             std::uint64_t seed);

// Builds the ensemble described by spec from a single Rng(spec.seed) stream.
// Throws BadRank, RanksExceedDim or BadPriors.
Ensemble generate(const GenSpec& spec);

// {I/2, diag(1/3, 2/3)} with equal priors: linearly independent but not
// unambiguously distinguishable.
Ensemble full_rank_counterexample();

}  // namespace udisc
