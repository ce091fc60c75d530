#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace udisc {

enum class ErrorKind {
  NotSquare,
  NotHermitian,
  NotPsd,
  TraceNotOne,
  NotOrthonormal,
  DimMismatch,
  CountMismatch,
  EmptySet,
  InvalidEnsemble,
  InvalidPovm,
  InvalidTolerance,
  NotOrthogonalFamily,
  PreconditionNotMet,
  ConditionFails,
  DeskScaleExceeded,
  BadPriors,
  BadRank,
  RanksExceedDim,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this type. `measured()` carries the
// offending quantity (asymmetry, worst eigenvalue, trace) when there is one;
// `indices()` names the states involved for per-state failures.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, double measured = 0.0,
        std::vector<std::size_t> indices = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        measured_(measured),
        indices_(std::move(indices)) {}

  ErrorKind kind() const noexcept { return kind_; }
  double measured() const noexcept { return measured_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  ErrorKind kind_;
  double measured_;
  std::vector<std::size_t> indices_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPsd: return "NotPsd";
    case ErrorKind::TraceNotOne: return "TraceNotOne";
    case ErrorKind::NotOrthonormal: return "NotOrthonormal";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::CountMismatch: return "CountMismatch";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::InvalidEnsemble: return "InvalidEnsemble";
    case ErrorKind::InvalidPovm: return "InvalidPovm";
    case ErrorKind::InvalidTolerance: return "InvalidTolerance";
    case ErrorKind::NotOrthogonalFamily: return "NotOrthogonalFamily";
    case ErrorKind::PreconditionNotMet: return "PreconditionNotMet";
    case ErrorKind::ConditionFails: return "ConditionFails";
    case ErrorKind::DeskScaleExceeded: return "DeskScaleExceeded";
    case ErrorKind::BadPriors: return "BadPriors";
    case ErrorKind::BadRank: return "BadRank";
    case ErrorKind::RanksExceedDim: return "RanksExceedDim";
  }
  return "Unknown";
}

}  // namespace udisc
