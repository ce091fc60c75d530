#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "udisc/states.hpp"

namespace udisc {

inline constexpr std::string_view kSchemaVersion = "udisc-1";

// Input file missing or unreadable.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed document. Syntax errors carry a 1-based line and column; schema
// errors carry a JSON path such as $.states[1].matrix[0][2] and line = 0.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line, std::size_t column, std::string path)
      : std::runtime_error(what), line_(line), column_(column), path_(std::move(path)) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& path() const noexcept { return path_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string path_;
};

// Parses an ensemble file, or the "ensemble" member of a report. Throws
// FormatError for syntax/schema errors and udisc::Error (state index in
// indices()) when a state or the priors fail validation.
Ensemble parse_ensemble(std::string_view text, const ToleranceConfig& tol);
Ensemble read_ensemble_file(const std::filesystem::path& path, const ToleranceConfig& tol);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
nlohmann::json vector_to_json(const ComplexVector& v);
nlohmann::json ensemble_to_json(const Ensemble& e);

// Pretty-printed document with a trailing newline. Doubles are written in the
// shortest form that reads back to the same value.
std::string write_ensemble(const Ensemble& e);

}  // namespace udisc
