#include "udisc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <optional>
#include <string>

#include <omp.h>

#include "udisc/rng.hpp"
#include "udisc/supports.hpp"

namespace udisc {

std::string_view to_string(OptimizationStatus status) {
  switch (status) {
    case OptimizationStatus::Converged: return "Converged";
    case OptimizationStatus::IterationCap: return "IterationCap";
    case OptimizationStatus::Infeasible: return "Infeasible";
  }
  return "Unknown";
}

double js_two_pure_optimal(double overlap, double eta1, double eta2) {
  if (!(eta1 > 0.0) || !(eta2 > 0.0) || std::abs(eta1 + eta2 - 1.0) > 1e-10) {
    throw Error(ErrorKind::BadPriors, "priors must be positive and sum to 1");
  }
  if (!(overlap >= 0.0 && overlap <= 1.0)) {
    throw Error(ErrorKind::BadPriors, "overlap must lie in [0, 1]", overlap);
  }
  const double lo = std::min(eta1, eta2);
  const double hi = std::max(eta1, eta2);
  if (overlap <= std::sqrt(lo / hi)) return 2.0 * std::sqrt(eta1 * eta2) * overlap;
  // Only the likelier state is worth identifying.
  return lo + hi * overlap * overlap;
}

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
// Squared Newton decrement that ends a centering phase. The resulting objective
// error is about half this over t; gradients carry roundoff of order t * eps, so
// much smaller values are not reachable once t is large.
constexpr double kCenteringTol = 1e-9;
// A centering phase normally takes 7-25 Newton steps. One that runs past this
// has hit the precision floor of the slack matrix.
constexpr std::size_t kStageStepCap = 60;
// Gap accepted as converged when the floor stops the path early.
constexpr double kFloorGapLimit = 1e-7;

// Coordinates of a Hermitian d x d matrix in the basis {E_aa, (E_ab + E_ba)/sqrt2,
// i(E_ab - E_ba)/sqrt2}, which is orthonormal for <A, B> = Re Tr(AB).
void to_coords(const ComplexMatrix& a, double* x) {
  const Eigen::Index d = a.rows();
  std::size_t k = 0;
  for (Eigen::Index p = 0; p < d; ++p) x[k++] = a(p, p).real();
  for (Eigen::Index p = 0; p < d; ++p) {
    for (Eigen::Index q = p + 1; q < d; ++q) {
      x[k++] = kSqrt2 * a(p, q).real();
      x[k++] = kSqrt2 * a(p, q).imag();
    }
  }
}

ComplexMatrix from_coords(const double* x, Eigen::Index d) {
  ComplexMatrix a(d, d);
  std::size_t k = 0;
  for (Eigen::Index p = 0; p < d; ++p) a(p, p) = x[k++];
  for (Eigen::Index p = 0; p < d; ++p) {
    for (Eigen::Index q = p + 1; q < d; ++q) {
      const Complex v(x[k], x[k + 1]);
      k += 2;
      a(p, q) = v / kSqrt2;
      a(q, p) = std::conj(v) / kSqrt2;
    }
  }
  return a;
}

struct Block {
  std::size_t state = 0;
  ComplexMatrix basis;    // V: dim x d, orthonormal complement of supp(S_i)
  ComplexMatrix reduced;  // V^H rho_i V
  double weight = 0.0;    // eta_i
  Eigen::Index size = 0;  // d
  Eigen::Index offset = 0;
};

struct Problem {
  Eigen::Index dim = 0;
  std::vector<Block> blocks;
  Eigen::Index coords = 0;    // sum d^2
  double barrier_order = 0.0; // m = dim + sum d
};

double log_det(const Eigen::LLT<ComplexMatrix>& llt) {
  return 2.0 * llt.matrixLLT().diagonal().real().array().log().sum();
}

double objective(const Problem& pr, const std::vector<ComplexMatrix>& ys) {
  double total = 0.0;
  for (std::size_t b = 0; b < pr.blocks.size(); ++b) {
    total += pr.blocks[b].weight * born(pr.blocks[b].reduced, ys[b]);
  }
  return total;
}

ComplexMatrix slack(const Problem& pr, const std::vector<ComplexMatrix>& ys) {
  ComplexMatrix s = ComplexMatrix::Identity(pr.dim, pr.dim);
  for (std::size_t b = 0; b < pr.blocks.size(); ++b) {
    s -= pr.blocks[b].basis * ys[b] * pr.blocks[b].basis.adjoint();
  }
  return s;
}

// Log-det part of the barrier, or nullopt outside the open feasible set. The
// linear part is handled separately so steps can be compared without
// cancellation against t * objective at large t.
std::optional<double> log_barrier(const Problem& pr, const std::vector<ComplexMatrix>& ys) {
  double value = 0.0;
  for (const auto& y : ys) {
    Eigen::LLT<ComplexMatrix> llt(y);
    if (llt.info() != Eigen::Success) return std::nullopt;
    value -= log_det(llt);
  }
  Eigen::LLT<ComplexMatrix> llt(slack(pr, ys));
  if (llt.info() != Eigen::Success) return std::nullopt;
  return value - log_det(llt);
}

struct RestartOutcome {
  std::vector<ComplexMatrix> ys;
  double objective = 0.0;
  double gap = 1.0;  // 1 is the trivial bound when no stage was centered
  std::size_t iterations = 0;
  bool capped = false;
  bool floored = false;  // stopped at the double-precision floor of centering
};

// Path following on  -t <w R, Y> - sum log det Y_b - log det(I - sum V_b Y_b V_b^H).
// Newton steps are taken in the congruence-scaled variable Y_b = L_b (I + Z_b) L_b^H
// (Y_b = L_b L_b^H), which turns the Y-barrier Hessian into the identity.
RestartOutcome run_restart(const Problem& pr, std::vector<ComplexMatrix> ys, const OracleOptions& opt) {
  RestartOutcome out;
  const std::size_t nb = pr.blocks.size();
  const double m = pr.barrier_order;
  double t = m;

  std::vector<ComplexMatrix> chol(nb), scaled_basis(nb), whitened(nb);
  RealMatrix hess(pr.coords, pr.coords);
  RealVector grad(pr.coords);
  std::vector<double> unit(static_cast<std::size_t>(pr.coords), 0.0);

  std::vector<ComplexMatrix> centered;
  bool done = false;
  while (!done) {
    // Centering.
    double previous_decrement = INFINITY;
    std::size_t stage_steps = 0;
    bool stalled = false;
    for (;;) {
      if (out.iterations >= opt.iter_cap) {
        out.capped = true;
        break;
      }
      if (stage_steps >= kStageStepCap) {
        stalled = true;
        break;
      }
      for (std::size_t b = 0; b < nb; ++b) {
        Eigen::LLT<ComplexMatrix> llt(ys[b]);
        chol[b] = llt.matrixL();
        scaled_basis[b] = pr.blocks[b].basis * chol[b];
      }
      Eigen::LLT<ComplexMatrix> s_llt(slack(pr, ys));
      for (std::size_t b = 0; b < nb; ++b) {
        whitened[b] = s_llt.matrixL().solve(scaled_basis[b]);
      }

      hess.setIdentity();
      for (std::size_t b = 0; b < nb; ++b) {
        const Block& blk = pr.blocks[b];
        const ComplexMatrix g = -t * blk.weight * (chol[b].adjoint() * blk.reduced * chol[b]) -
                                ComplexMatrix::Identity(blk.size, blk.size) +
                                whitened[b].adjoint() * whitened[b];
        to_coords(g, grad.data() + blk.offset);
      }
      std::vector<double> column(static_cast<std::size_t>(pr.coords));
      for (std::size_t b = 0; b < nb; ++b) {
        const Block& blk = pr.blocks[b];
        const Eigen::Index dd = blk.size * blk.size;
        for (Eigen::Index k = 0; k < dd; ++k) {
          unit[static_cast<std::size_t>(k)] = 1.0;
          const ComplexMatrix e = from_coords(unit.data(), blk.size);
          unit[static_cast<std::size_t>(k)] = 0.0;
          for (std::size_t c = 0; c < nb; ++c) {
            const Block& other = pr.blocks[c];
            const ComplexMatrix cross = whitened[c].adjoint() * whitened[b];
            to_coords(cross * e * cross.adjoint(), column.data());
            for (Eigen::Index r = 0; r < other.size * other.size; ++r) {
              hess(other.offset + r, blk.offset + k) += column[static_cast<std::size_t>(r)];
            }
          }
        }
      }
      hess = 0.5 * (hess + hess.transpose()).eval();

      Eigen::LLT<RealMatrix> h_llt(hess);
      const RealVector step = -h_llt.solve(grad);
      const double decrement = -grad.dot(step);
      if (!(decrement > kCenteringTol)) break;
      // Inside the quadratic region the decrement must shrink fast; if it does
      // not, it has reached the roundoff floor for this t.
      if (decrement < 1e-3 && decrement > 0.25 * previous_decrement) break;
      previous_decrement = decrement;

      std::vector<ComplexMatrix> direction(nb);
      for (std::size_t b = 0; b < nb; ++b) {
        const ComplexMatrix z = from_coords(step.data() + pr.blocks[b].offset, pr.blocks[b].size);
        direction[b] = chol[b] * z * chol[b].adjoint();
      }
      const double current = *log_barrier(pr, ys);
      const double slope = -t * objective(pr, direction);
      double s = 1.0;
      std::vector<ComplexMatrix> trial(nb);
      bool moved = false;
      while (s > 1e-14) {
        for (std::size_t b = 0; b < nb; ++b) trial[b] = ys[b] + s * direction[b];
        const auto value = log_barrier(pr, trial);
        if (value && (*value - current) + s * slope <= -0.25 * s * decrement) {
          moved = true;
          break;
        }
        s *= 0.5;
      }
      ++out.iterations;
      ++stage_steps;
      if (!moved) break;  // numerical floor of the line search: treat as centered
      for (std::size_t b = 0; b < nb; ++b) ys[b] = 0.5 * (trial[b] + trial[b].adjoint());
    }
    if (out.capped) break;
    if (stalled) {
      // Slack eigenvalues ~1/t are no longer resolved; keep the last centered point.
      out.floored = true;
      if (!centered.empty()) ys = centered;
      break;
    }
    centered = ys;
    out.gap = m / t;
    if (out.gap < opt.gap_tol) {
      done = true;
    } else {
      t *= 10.0;
    }
  }
  out.objective = objective(pr, ys);
  out.ys = std::move(ys);
  return out;
}

std::vector<ComplexMatrix> starting_point(const Problem& pr, std::size_t restart, std::uint64_t seed) {
  ComplexMatrix cover = ComplexMatrix::Zero(pr.dim, pr.dim);
  for (const auto& blk : pr.blocks) cover += blk.basis * blk.basis.adjoint();
  const double alpha = 0.5 / hermitian_eig(cover).eigenvalues(0);

  std::vector<ComplexMatrix> ys;
  Rng rng(derive_seed(seed, restart));
  for (const auto& blk : pr.blocks) {
    ComplexMatrix y = ComplexMatrix::Identity(blk.size, blk.size);
    if (restart > 0) {
      const ComplexMatrix g = rng.ginibre(blk.size, blk.size);
      ComplexMatrix w = g * g.adjoint();
      w /= hermitian_eig(w).eigenvalues(0);
      y = 0.5 * y + 0.5 * w;
    }
    ys.push_back(alpha * y);
  }
  return ys;
}

}  // namespace

OptimizationResult optimal_unambiguous(const Ensemble& e, const ToleranceConfig& tol,
                                       const OracleOptions& options) {
  if (e.dim() > kDeskMaxDim || e.size() > kDeskMaxStates) {
    throw Error(ErrorKind::DeskScaleExceeded,
                "desk scale is dim <= " + std::to_string(kDeskMaxDim) + " and n <= " +
                    std::to_string(kDeskMaxStates) + "; got dim " + std::to_string(e.dim()) +
                    ", n " + std::to_string(e.size()));
  }
  const UnambiguousCondition cond = unambiguous_condition(e, tol);

  Problem pr;
  pr.dim = static_cast<Eigen::Index>(e.dim());
  pr.barrier_order = static_cast<double>(e.dim());
  OptimizationResult result;
  result.block_dims.assign(e.size(), 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!cond.flags[i]) continue;
    Block blk;
    blk.state = i;
    blk.basis = complement_basis(joint_support_excluding(e, i, tol).basis, e.dim(), tol);
    blk.reduced = blk.basis.adjoint() * e.state(i).matrix() * blk.basis;
    blk.reduced = 0.5 * (blk.reduced + blk.reduced.adjoint()).eval();
    blk.weight = e.prior(i);
    blk.size = blk.basis.cols();
    blk.offset = pr.coords;
    pr.coords += blk.size * blk.size;
    pr.barrier_order += static_cast<double>(blk.size);
    result.block_dims[i] = static_cast<std::size_t>(blk.size);
    pr.blocks.push_back(std::move(blk));
  }

  std::vector<ComplexMatrix> elements(e.size(), ComplexMatrix::Zero(pr.dim, pr.dim));
  if (pr.blocks.empty()) {
    result.povm = Povm::make(e.dim(), std::move(elements), tol);
    result.p_star = 1.0;
    result.success_probs.assign(e.size(), 0.0);
    result.status = OptimizationStatus::Infeasible;
    return result;
  }

  const std::size_t restarts = std::max<std::size_t>(options.restarts, 1);
  std::vector<RestartOutcome> runs(restarts);
  const auto count = static_cast<std::ptrdiff_t>(restarts);
  if (options.exec == Execution::Serial) {
    for (std::ptrdiff_t r = 0; r < count; ++r) {
      runs[r] = run_restart(pr, starting_point(pr, static_cast<std::size_t>(r), options.seed), options);
    }
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t r = 0; r < count; ++r) {
      try {
        runs[r] = run_restart(pr, starting_point(pr, static_cast<std::size_t>(r), options.seed), options);
      } catch (...) {
#pragma omp critical(udisc_oracle)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  // Best objective wins; ties go to the lowest restart index.
  std::size_t best = 0;
  for (std::size_t r = 0; r < restarts; ++r) {
    result.restart_objectives.push_back(runs[r].objective);
    if (runs[r].objective > runs[best].objective) best = r;
  }
  const RestartOutcome& win = runs[best];
  for (std::size_t b = 0; b < pr.blocks.size(); ++b) {
    const Block& blk = pr.blocks[b];
    ComplexMatrix pi = blk.basis * win.ys[b] * blk.basis.adjoint();
    elements[blk.state] = 0.5 * (pi + pi.adjoint());
  }
  result.povm = Povm::make(e.dim(), std::move(elements), tol);
  result.best_restart = best;
  result.iterations = win.iterations;
  result.objective_gap = win.gap;
  result.p_star = std::clamp(1.0 - win.objective, 0.0, 1.0);
  result.success_probs.resize(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    result.success_probs[i] = born(result.povm.element(i), e.state(i).matrix());
  }
  if (!cond.all) {
    result.status = OptimizationStatus::Infeasible;
  } else {
    const bool converged = win.gap < options.gap_tol || (win.floored && win.gap <= kFloorGapLimit);
    result.status = !win.capped && converged ? OptimizationStatus::Converged : OptimizationStatus::IterationCap;
  }
  return result;
}

}  // namespace udisc
