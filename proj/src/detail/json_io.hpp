// Copyright (c) 2026 the loewner developers. See the top-level LICENSE file
// for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef LOEWNER_DETAIL_JSON_IO_HPP
#define LOEWNER_DETAIL_JSON_IO_HPP

#include <Eigen/Dense>
#include <filesystem>
#include <string>

#include "json.hpp"
#include "detail/text_format.hpp"
#include "loewner/errors.hpp"

namespace loewner::detail {

// Insertion order is preserved so emitted documents match the documented
// schemas key for key.
using Json = nlohmann::ordered_json;

inline Json load_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path.string() + "': " + e.what());
  }
}

inline void save_json_file(const Json& doc, const std::filesystem::path& path) {
  write_file_atomic(path, doc.dump() + "\n");
}

inline Json matrix_to_json(const Eigen::MatrixXd& mat) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < mat.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < mat.cols(); ++j) row.push_back(mat(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Eigen::MatrixXd matrix_from_json(const Json& node, Eigen::Index rows,
                                        Eigen::Index cols,
                                        const std::string& key) {
  if (!node.is_array() || static_cast<Eigen::Index>(node.size()) != rows) {
    throw SchemaMismatch("'" + key + "' must be an array of " +
                         std::to_string(rows) + " rows");
  }
  Eigen::MatrixXd mat(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = node[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw SchemaMismatch("'" + key + "' row " + std::to_string(i) +
                           " must have " + std::to_string(cols) + " entries");
    }
    for (Eigen::Index j = 0; j < cols; ++j) {
      const Json& cell = row[static_cast<std::size_t>(j)];
      if (!cell.is_number()) {
        throw SchemaMismatch("'" + key + "' entry (" + std::to_string(i) +
                             "," + std::to_string(j) + ") is not a number");
      }
      mat(i, j) = cell.get<double>();
    }
  }
  return mat;
}

inline Eigen::Index index_field(const Json& doc, const std::string& key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw SchemaMismatch("missing or non-integer '" + key + "' field");
  }
  const long long v = doc[key].get<long long>();
  if (v < 1) {
    throw SchemaMismatch("'" + key + "' must be at least 1");
  }
  return static_cast<Eigen::Index>(v);
}

}  // namespace loewner::detail

#endif  // LOEWNER_DETAIL_JSON_IO_HPP
