#include "udisc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <utility>

#include <omp.h>

#include "udisc/numerics.hpp"

namespace udisc {

double fidelity(const DensityMatrix& a, const DensityMatrix& b, const ToleranceConfig& tol) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimMismatch,
                "fidelity of states with dimensions " + std::to_string(a.dim()) + " and " +
                    std::to_string(b.dim()));
  }
  return trace_norm(psd_sqrt(a.matrix(), tol) * psd_sqrt(b.matrix(), tol));
}

RealMatrix fidelity_matrix(const Ensemble& e, const ToleranceConfig& tol, Execution exec) {
  const auto n = static_cast<std::ptrdiff_t>(e.size());
  std::vector<ComplexMatrix> roots(static_cast<std::size_t>(n));
  std::vector<std::pair<std::ptrdiff_t, std::ptrdiff_t>> pairs;
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    for (std::ptrdiff_t j = i; j < n; ++j) pairs.emplace_back(i, j);
  }
  const auto npairs = static_cast<std::ptrdiff_t>(pairs.size());
  RealMatrix f(n, n);

  if (exec == Execution::Serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) roots[i] = psd_sqrt(e.state(i).matrix(), tol);
    for (std::ptrdiff_t p = 0; p < npairs; ++p) {
      const auto [i, j] = pairs[p];
      f(i, j) = trace_norm(roots[i] * roots[j]);
    }
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      try {
        roots[i] = psd_sqrt(e.state(i).matrix(), tol);
      } catch (...) {
#pragma omp critical(udisc_fidelity)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t p = 0; p < npairs; ++p) {
      const auto [i, j] = pairs[p];
      f(i, j) = trace_norm(roots[i] * roots[j]);
    }
  }
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    for (std::ptrdiff_t j = 0; j < i; ++j) f(i, j) = f(j, i);
  }
  return f;
}

double coefficient_c(std::span<const double> priors, std::uint64_t k, const RealMatrix& fidelities) {
  const std::size_t n = priors.size();
  const double power = static_cast<double>(k);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double fij = fidelities(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      sum += std::pow(priors[i] * priors[j] * fij * fij, power);
    }
  }
  return sum;
}

double coefficient_c(const Ensemble& e, std::uint64_t k, const RealMatrix& fidelities) {
  return coefficient_c(std::span<const double>(e.priors()), k, fidelities);
}

BoundReport bound_series_from_fidelities(std::span<const double> priors, const RealMatrix& fidelities,
                                         std::size_t max_level, SeriesStop stop) {
  const std::size_t n = priors.size();
  const std::size_t levels = std::clamp<std::size_t>(max_level, 1, kMaxBoundLevels);

  // Pair weights x_ij = eta_i eta_j F_ij^2 over ordered pairs. The radicals are
  // evaluated on x / max(x): with m_{j+1} = 2 m_j every level of the nest scales
  // by the same power of max(x), so the recursion is scale free and the deep
  // terms never underflow.
  std::vector<double> weights;
  weights.reserve(n * (n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double fij = fidelities(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      weights.push_back(priors[i] * priors[j] * fij * fij);
    }
  }
  const double top = weights.empty() ? 0.0 : *std::max_element(weights.begin(), weights.end());
  const double ratio_nn = static_cast<double>(n) / static_cast<double>(n - 1);

  BoundReport out;
  out.fidelities = fidelities;
  std::vector<double> scaled;  // sum (x/top)^m per level
  for (std::size_t level = 1; level <= levels; ++level) {
    const std::uint64_t m = std::uint64_t{1} << (level - 1);
    const double power = static_cast<double>(m);
    double c = 0.0;
    double cs = 0.0;
    for (double x : weights) {
      c += std::pow(x, power);
      if (top > 0.0) cs += std::pow(x / top, power);
    }
    out.exponents.push_back(m);
    out.coefficients.push_back(c);
    scaled.push_back(cs);

    double value = 0.0;
    if (top > 0.0) {
      double s = std::sqrt(ratio_nn * scaled[level - 1]);
      for (std::size_t j = level - 1; j-- > 0;) s = std::sqrt(scaled[j] + s);
      value = std::sqrt(top) * s;
    }
    out.levels.push_back(value);
    if (level >= 2 && out.converged_at == 0 &&
        std::abs(value - out.levels[level - 2]) < kSeriesConvergence) {
      out.converged_at = level;
      if (stop == SeriesStop::AtConvergence) break;
    }
  }
  out.limit = *std::max_element(out.levels.begin(), out.levels.end());
  return out;
}

BoundReport bound_series(const Ensemble& e, std::size_t max_level, const ToleranceConfig& tol,
                         SeriesStop stop) {
  return bound_series_from_fidelities(e.priors(), fidelity_matrix(e, tol), max_level, stop);
}

bool ProofChainSlacks::holds() const {
  if (pairwise < -kPairwiseSlackTol || levels < -kLevelSlackTol) return false;
  return std::all_of(cauchy.begin(), cauchy.end(), [](double s) { return s >= -kCauchySlackTol; });
}

ProofChainSlacks verify_proof_chain(const Ensemble& e, const Povm& p, const ToleranceConfig& tol) {
  const DiscriminationOutcome outcome = evaluate_povm(e, p);
  if (outcome.offdiag_max > 1e-10) {
    throw Error(ErrorKind::PreconditionNotMet,
                "POVM misidentifies states: max |Tr(Pi_j rho_i)| = " + std::to_string(outcome.offdiag_max),
                outcome.offdiag_max);
  }
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!(outcome.success_probs[i] > 0.0)) {
      throw Error(ErrorKind::PreconditionNotMet, "state " + std::to_string(i) + " is never identified",
                  outcome.success_probs[i], {i});
    }
  }

  const std::size_t n = e.size();
  ProofChainSlacks out;
  out.bounds = bound_series(e, kMaxBoundLevels, tol);
  out.inconclusive_prob = outcome.inconclusive_prob;
  for (std::size_t i = 0; i < n; ++i) {
    out.inconclusive_per_state.push_back(outcome.outcome_table(static_cast<Eigen::Index>(i), 0));
  }
  const auto& t = out.inconclusive_per_state;
  const auto& eta = e.priors();

  out.pairwise = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double fij = out.bounds.fidelities(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      out.pairwise = std::min(out.pairwise, t[i] * t[j] - fij * fij);
    }
  }

  for (std::uint64_t k : {1u, 2u, 4u}) {
    const double power = static_cast<double>(k);
    double a = 0.0;
    double b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      a += std::pow(eta[i] * t[i], 2.0 * power);
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) b += std::pow(eta[i] * eta[j] * t[i] * t[j], power);
      }
    }
    out.cauchy_k.push_back(k);
    out.cauchy.push_back(a - b / static_cast<double>(n - 1));
  }

  out.levels = std::numeric_limits<double>::infinity();
  for (double level : out.bounds.levels) {
    out.levels = std::min(out.levels, out.inconclusive_prob - level);
  }
  return out;
}

}  // namespace udisc
