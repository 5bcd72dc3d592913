// Copyright (c) 2026 the loewner developers. See the top-level LICENSE file
// for details.
//
// SPDX-License-Identifier: Apache-2.0

#include "loewner/analysis.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "detail/json_io.hpp"
#include "detail/text_format.hpp"
#include "loewner/errors.hpp"
#include "loewner/kernels.hpp"

namespace loewner {
namespace {

std::vector<Eigen::MatrixXcd> evaluate_model(
    const FrequencyResponseDataset& ds, const ReducedModel& model) {
  if (model.outputs() != ds.outputs() || model.inputs() != ds.inputs()) {
    throw DimensionMismatch(
        "model is " + std::to_string(model.outputs()) + "x" +
        std::to_string(model.inputs()) + " but the dataset is " +
        std::to_string(ds.outputs()) + "x" + std::to_string(ds.inputs()));
  }
  try {
    return kernels::sample_transfer_omp(model.E(), model.A(), model.B(),
                                        model.C(), model.D(), ds.points());
  } catch (const SingularPencil& e) {
    throw PoleHit(e.message());
  }
}

double two_norm(const Eigen::MatrixXcd& mat) {
  if (mat.rows() == 1 && mat.cols() == 1) return std::abs(mat(0, 0));
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(mat).singularValues()(0);
}

double ratio(double num, double den) {
  if (den == 0.0) {
    return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return num / den;
}

// Phase in (-pi, pi]; std::arg may return -pi, which folds to pi.
double phase(Complex z) {
  const double a = std::arg(z);
  return a == -std::numbers::pi ? std::numbers::pi : a;
}

}  // namespace

ErrorReport relative_error(const FrequencyResponseDataset& ds,
                           const ReducedModel& model) {
  const std::vector<Eigen::MatrixXcd> G = evaluate_model(ds, model);
  ErrorReport report;
  report.order = model.order();
  report.per_frequency.reserve(ds.size());
  double num_sq = 0.0;
  double den_sq = 0.0;
  for (std::size_t k = 0; k < ds.size(); ++k) {
    const Eigen::MatrixXcd diff = G[k] - ds[k].H;
    num_sq += diff.squaredNorm();
    den_sq += ds[k].H.squaredNorm();
    report.per_frequency.push_back(
        {ds[k].s.imag(), ratio(two_norm(diff), two_norm(ds[k].H))});
  }
  report.epsilon = ratio(std::sqrt(num_sq), std::sqrt(den_sq));

  int unstable = 0;
  for (Complex pole : poles(model)) {
    if (pole.real() > 0.0) ++unstable;
  }
  report.notes.push_back("unstable_poles=" + std::to_string(unstable));
  return report;
}

std::vector<SweepEntry> error_sweep(const LoewnerPencil& pencil,
                                    const PencilSVD& svd,
                                    const FrequencyResponseDataset& ds,
                                    const std::vector<int>& orders) {
  if (orders.empty()) {
    throw ROutOfRange("sweep needs at least one order");
  }
  const std::int64_t count = static_cast<std::int64_t>(orders.size());
  std::vector<SweepEntry> entries(orders.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < count; ++k) {
    SweepEntry& entry = entries[static_cast<std::size_t>(k)];
    entry.order = orders[static_cast<std::size_t>(k)];
    try {
      const ReducedModel model = reduce(pencil, svd, entry.order);
      entry.epsilon = relative_error(ds, model).epsilon;
      entry.status = "ok";
    } catch (const Error& e) {
      entry.epsilon = std::numeric_limits<double>::quiet_NaN();
      entry.status = e.kind();
    }
  }
  return entries;
}

void write_response_table(const FrequencyResponseDataset& ds,
                          const ReducedModel& model,
                          const std::filesystem::path& path) {
  const std::vector<Eigen::MatrixXcd> G = evaluate_model(ds, model);
  std::string out = "omega,|H|,|G|,argH,argG\n";
  for (std::size_t k = 0; k < ds.size(); ++k) {
    const std::string omega = detail::format_double(ds[k].s.imag());
    for (Eigen::Index i = 0; i < ds.outputs(); ++i) {
      for (Eigen::Index j = 0; j < ds.inputs(); ++j) {
        const Complex h = ds[k].H(i, j);
        const Complex g = G[k](i, j);
        out += omega;
        out += ',';
        out += detail::format_double(std::abs(h));
        out += ',';
        out += detail::format_double(std::abs(g));
        out += ',';
        out += detail::format_double(phase(h));
        out += ',';
        out += detail::format_double(phase(g));
        out += '\n';
      }
    }
  }
  detail::write_file_atomic(path, out);
}

void write_sweep_csv(const std::vector<SweepEntry>& entries,
                     const std::filesystem::path& path) {
  std::string out = "r,epsilon,status\n";
  for (const SweepEntry& entry : entries) {
    out += std::to_string(entry.order);
    out += ',';
    out += detail::format_double(entry.epsilon);
    out += ',';
    out += entry.status;
    out += '\n';
  }
  detail::write_file_atomic(path, out);
}

void write_singular_values_csv(const Eigen::VectorXd& sigma,
                               const std::filesystem::path& path) {
  std::string out = "k,sigma\n";
  for (Eigen::Index k = 0; k < sigma.size(); ++k) {
    out += std::to_string(k + 1);
    out += ',';
    out += detail::format_double(sigma(k));
    out += '\n';
  }
  detail::write_file_atomic(path, out);
}

void write_error_report_json(const ErrorReport& report,
                             const std::filesystem::path& path) {
  detail::Json doc;
  doc["order"] = report.order;
  doc["epsilon"] = report.epsilon;
  doc["notes"] = report.notes;
  detail::Json rows = detail::Json::array();
  for (const FrequencyError& fe : report.per_frequency) {
    detail::Json row;
    row["omega"] = fe.omega;
    row["relative"] = fe.relative;
    rows.push_back(std::move(row));
  }
  doc["per_frequency"] = std::move(rows);
  detail::save_json_file(doc, path);
}

}  // namespace loewner
