#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "siegel/core.hpp"

namespace siegel {

/// File format: {"dim": d, "model": "klein"?, "matrices": [{"re": [[...]],
/// "im": [[...]]}, ...]} with d x d real arrays for both parts.
struct MatrixFile {
  Index dim = 0;
  std::vector<ComplexMatrix<double>> matrices;
  std::optional<std::string> model;
};

namespace detail {

inline RealMatrix<double> parse_real_array(const nlohmann::json& j, Index dim,
                                           const std::string& what) {
  if (!j.is_array() || static_cast<Index>(j.size()) != dim) {
    throw ParseError(what + ": expected a " + std::to_string(dim) + "-row array");
  }
  RealMatrix<double> out(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != dim) {
      throw ParseError(what + ": row " + std::to_string(r) + " has wrong length");
    }
    for (Index c = 0; c < dim; ++c) {
      const auto& cell = row[static_cast<std::size_t>(c)];
      if (!cell.is_number()) {
        throw ParseError(what + ": non-numeric entry");
      }
      out(r, c) = cell.get<double>();
    }
  }
  return out;
}

}  // namespace detail

inline MatrixFile parse_matrix_file(const nlohmann::json& j) {
  MatrixFile out;
  if (!j.is_object() || !j.contains("dim") || !j.contains("matrices")) {
    throw ParseError("matrix file: expected an object with 'dim' and 'matrices'");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1) {
    throw ParseError("matrix file: 'dim' must be a positive integer");
  }
  out.dim = j["dim"].get<Index>();
  if (j.contains("model")) {
    if (!j["model"].is_string()) throw ParseError("matrix file: 'model' must be a string");
    out.model = j["model"].get<std::string>();
  }
  const auto& arr = j["matrices"];
  if (!arr.is_array() || arr.empty()) {
    throw ParseError("matrix file: 'matrices' must be a nonempty array");
  }
  for (const auto& entry : arr) {
    if (!entry.is_object() || !entry.contains("re") || !entry.contains("im")) {
      throw ParseError("matrix file: each matrix needs 're' and 'im' arrays");
    }
    const RealMatrix<double> re = detail::parse_real_array(entry["re"], out.dim, "re");
    const RealMatrix<double> im = detail::parse_real_array(entry["im"], out.dim, "im");
    ComplexMatrix<double> m(out.dim, out.dim);
    m.real() = re;
    m.imag() = im;
    if (!m.allFinite()) throw ParseError("matrix file: entries must be finite");
    out.matrices.push_back(std::move(m));
  }
  return out;
}

inline MatrixFile load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return parse_matrix_file(j);
}

inline nlohmann::json matrix_to_json(const ComplexMatrix<double>& m) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    nlohmann::json rrow = nlohmann::json::array();
    nlohmann::json irow = nlohmann::json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      rrow.push_back(m(r, c).real());
      irow.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  return {{"re", std::move(re)}, {"im", std::move(im)}};
}

inline nlohmann::json matrix_file_to_json(const MatrixFile& mf) {
  nlohmann::json j;
  j["dim"] = mf.dim;
  if (mf.model) j["model"] = *mf.model;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& m : mf.matrices) arr.push_back(matrix_to_json(m));
  j["matrices"] = std::move(arr);
  return j;
}

inline void save_matrix_file(const std::string& path, const MatrixFile& mf) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  out << matrix_file_to_json(mf).dump(2) << "\n";
}

}  // namespace siegel
