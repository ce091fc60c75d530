#pragma once

#include <cmath>
#include <vector>

#include "udisc/generators.hpp"
#include "udisc/rng.hpp"
#include "udisc/states.hpp"

namespace udisc::test {

inline const ToleranceConfig kTol{};

inline ComplexVector ket(std::initializer_list<Complex> amps) {
  ComplexVector v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index k = 0;
  for (const auto& a : amps) v(k++) = a;
  return v;
}

inline ComplexVector ket0() { return ket({1.0, 0.0}); }
inline ComplexVector ket1() { return ket({0.0, 1.0}); }
inline ComplexVector plus() { return ket({M_SQRT1_2, M_SQRT1_2}); }
inline ComplexVector minus() { return ket({M_SQRT1_2, -M_SQRT1_2}); }

inline ComplexMatrix proj(const ComplexVector& v) { return v * v.adjoint() / v.squaredNorm(); }

inline DensityMatrix pure(const ComplexVector& v) { return DensityMatrix::validate(proj(v), kTol); }

inline DensityMatrix diag(std::initializer_list<double> values) {
  const auto d = static_cast<Eigen::Index>(values.size());
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  Eigen::Index k = 0;
  for (double v : values) {
    m(k, k) = v;
    ++k;
  }
  return DensityMatrix::validate(m, kTol);
}

inline Ensemble ensemble(std::vector<DensityMatrix> states, std::vector<double> priors = {}) {
  if (priors.empty()) priors.assign(states.size(), 1.0 / static_cast<double>(states.size()));
  return Ensemble::make(std::move(states), std::move(priors));
}

// Two pure qubit states with real overlap s = <a|b>.
inline Ensemble pure_pair(double s, double eta1 = 0.5) {
  const ComplexVector a = ket0();
  const ComplexVector b = ket({s, std::sqrt(1.0 - s * s)});
  return ensemble({pure(a), pure(b)}, {eta1, 1.0 - eta1});
}

inline ComplexMatrix random_hermitian(Eigen::Index d, Rng& rng) {
  const ComplexMatrix g = rng.ginibre(d, d);
  return 0.5 * (g + g.adjoint());
}

// Strictly positive priors drawn from the stream, summing to 1.
inline std::vector<double> random_priors(std::size_t n, Rng& rng) {
  std::vector<double> p(n);
  double total = 0.0;
  for (auto& x : p) {
    x = 0.1 + rng.uniform();
    total += x;
  }
  for (auto& x : p) x /= total;
  double rest = 1.0;
  for (std::size_t i = 0; i + 1 < n; ++i) rest -= p[i];
  p.back() = rest;
  return p;
}

}  // namespace udisc::test
