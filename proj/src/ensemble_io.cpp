#include "udisc/ensemble_io.hpp"

#include <fstream>
#include <sstream>

namespace udisc {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw FormatError(path + ": " + what, 0, 0, path);
}

const json& member(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, std::string("missing field \"") + key + "\"");
  return *it;
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) schema_error(path, "expected a number");
  return v.get<double>();
}

ComplexMatrix parse_matrix(const json& rows, std::size_t dim, const std::string& path) {
  if (!rows.is_array() || rows.size() != dim) {
    schema_error(path, "expected " + std::to_string(dim) + " rows");
  }
  const auto d = static_cast<Eigen::Index>(dim);
  ComplexMatrix m(d, d);
  for (std::size_t r = 0; r < dim; ++r) {
    const std::string rpath = path + "[" + std::to_string(r) + "]";
    const json& row = rows[r];
    if (!row.is_array() || row.size() != dim) {
      schema_error(rpath, "expected " + std::to_string(dim) + " entries");
    }
    for (std::size_t c = 0; c < dim; ++c) {
      const std::string cpath = rpath + "[" + std::to_string(c) + "]";
      const json& cell = row[c];
      if (!cell.is_array() || cell.size() != 2) schema_error(cpath, "expected an [re, im] pair");
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          Complex(number(cell[0], cpath + "[0]"), number(cell[1], cpath + "[1]"));
    }
  }
  return m;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t k = 0; k < end; ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

Ensemble parse_ensemble(std::string_view text, const ToleranceConfig& tol) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    throw FormatError("syntax error at line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ": " + e.what(),
                      line, column, "");
  }
  std::string root = "$";
  if (doc.is_object() && doc.contains("ensemble")) {
    doc = doc["ensemble"];
    root = "ensemble";
  }
  const json& version = member(doc, "schema_version", root);
  if (!version.is_string() || version.get<std::string>() != kSchemaVersion) {
    schema_error(root + ".schema_version", "expected \"" + std::string(kSchemaVersion) + "\"");
  }
  const json& dimension = member(doc, "dimension", root);
  if (!dimension.is_number_unsigned() || dimension.get<std::size_t>() == 0) {
    schema_error(root + ".dimension", "expected a positive integer");
  }
  const auto dim = dimension.get<std::size_t>();
  const json& states = member(doc, "states", root);
  if (!states.is_array()) schema_error(root + ".states", "expected an array");

  std::vector<DensityMatrix> rhos;
  std::vector<double> priors;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const std::string spath = root + ".states[" + std::to_string(i) + "]";
    priors.push_back(number(member(states[i], "prior", spath), spath + ".prior"));
    const ComplexMatrix m = parse_matrix(member(states[i], "matrix", spath), dim, spath + ".matrix");
    try {
      rhos.push_back(DensityMatrix::validate(m, tol));
    } catch (const Error& e) {
      throw Error(e.kind(), "state " + std::to_string(i) + ": " + e.what(), e.measured(), {i});
    }
  }
  return Ensemble::make(std::move(rhos), std::move(priors));
}

Ensemble read_ensemble_file(const std::filesystem::path& path, const ToleranceConfig& tol) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ensemble(buf.str(), tol);
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const ComplexVector& v) {
  json out = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back({v(k).real(), v(k).imag()});
  return out;
}

json ensemble_to_json(const Ensemble& e) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["dimension"] = e.dim();
  json states = json::array();
  for (std::size_t i = 0; i < e.size(); ++i) {
    states.push_back({{"prior", e.prior(i)}, {"matrix", matrix_to_json(e.state(i).matrix())}});
  }
  doc["states"] = std::move(states);
  return doc;
}

std::string write_ensemble(const Ensemble& e) { return ensemble_to_json(e).dump(2) + "\n"; }

}  // namespace udisc
