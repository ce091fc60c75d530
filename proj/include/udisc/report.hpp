#pragma once

#include <cstddef>
#include <optional>

#include <json.hpp>

#include "udisc/bounds.hpp"
#include "udisc/classify.hpp"
#include "udisc/oracle.hpp"
#include "udisc/witness.hpp"

namespace udisc {

// Rounds to 12 significant digits, the precision of every computed number in
// machine output.
double sig12(double x);

nlohmann::json classification_json(const DistinguishabilityClass& c);
nlohmann::json bounds_json(const BoundReport& b);
nlohmann::json witness_json(const Ensemble& e, const WitnessSet& w);
nlohmann::json oracle_json(const Ensemble& e, const OptimizationResult& r);
nlohmann::json slacks_json(const ProofChainSlacks& s);
nlohmann::json tolerances_json(const ToleranceConfig& tol);

struct ReportOptions {
  std::size_t levels = kMaxBoundLevels;
  SeriesStop stop = SeriesStop::AtConvergence;
  bool run_oracle = true;
  OracleOptions oracle;
};

// classify -> bounds -> witness (if every state is identifiable) -> oracle (if
// desk scale) -> proof-chain slacks for each POVM produced. The input ensemble
// is echoed under "ensemble" so the report can be replayed.
nlohmann::json build_report(const Ensemble& e, const ToleranceConfig& tol, const ReportOptions& options);

}  // namespace udisc
