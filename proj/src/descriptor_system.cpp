// Copyright (c) 2026 the loewner developers. See the top-level LICENSE file
// for details.
//
// SPDX-License-Identifier: Apache-2.0

#include "loewner/descriptor_system.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "detail/json_io.hpp"
#include "loewner/errors.hpp"
#include "loewner/kernels.hpp"

namespace loewner {
namespace {

constexpr double kSingularRcond = 1e-14;
constexpr Eigen::Index kMaxEigOrder = 2000;

double uniform_draw(std::mt19937_64& gen, double lo, double hi) {
  const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

}  // namespace

DescriptorSystem::DescriptorSystem(Eigen::MatrixXd E, Eigen::MatrixXd A,
                                   Eigen::MatrixXd B, Eigen::MatrixXd C)
    : E_(std::move(E)),
      A_(std::move(A)),
      B_(std::move(B)),
      C_(std::move(C)),
      D_(Eigen::MatrixXd::Zero(C_.rows(), B_.cols())) {
  validate();
}

DescriptorSystem::DescriptorSystem(Eigen::MatrixXd E, Eigen::MatrixXd A,
                                   Eigen::MatrixXd B, Eigen::MatrixXd C,
                                   Eigen::MatrixXd D)
    : E_(std::move(E)),
      A_(std::move(A)),
      B_(std::move(B)),
      C_(std::move(C)),
      D_(std::move(D)) {
  validate();
}

void DescriptorSystem::validate() const {
  const Eigen::Index n = E_.rows();
  if (n < 1 || E_.cols() != n) {
    throw InvalidSystem("E must be square with order at least 1");
  }
  if (A_.rows() != n || A_.cols() != n) {
    throw InvalidSystem("A must match E (" + std::to_string(n) + "x" +
                        std::to_string(n) + ")");
  }
  if (B_.rows() != n || B_.cols() < 1) {
    throw InvalidSystem("B must have " + std::to_string(n) +
                        " rows and at least one column");
  }
  if (C_.cols() != n || C_.rows() < 1) {
    throw InvalidSystem("C must have " + std::to_string(n) +
                        " columns and at least one row");
  }
  if (D_.rows() != C_.rows() || D_.cols() != B_.cols()) {
    throw InvalidSystem("D must be outputs x inputs (" +
                        std::to_string(C_.rows()) + "x" +
                        std::to_string(B_.cols()) + ")");
  }
  if (!E_.allFinite() || !A_.allFinite() || !B_.allFinite() ||
      !C_.allFinite() || !D_.allFinite()) {
    throw InvalidSystem("system matrices contain non-finite entries");
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(E_);
  const double rc = lu.rcond();
  if (!(rc > kSingularRcond)) {
    throw InvalidSystem("E is numerically singular (rcond " +
                        std::to_string(rc) + ")");
  }
}

Eigen::MatrixXcd eval_transfer(const DescriptorSystem& sys, Complex s) {
  const std::vector<Complex> pts{s};
  return kernels::sample_transfer_serial(
      sys.E().cast<Complex>(), sys.A().cast<Complex>(), sys.B().cast<Complex>(),
      sys.C().cast<Complex>(), sys.D().cast<Complex>(), pts)[0];
}

std::vector<Complex> poles(const DescriptorSystem& sys) {
  const Eigen::Index n = sys.order();
  if (n > kMaxEigOrder) {
    throw DimensionTooLarge("dense pole computation is limited to order " +
                            std::to_string(kMaxEigOrder) + ", got " +
                            std::to_string(n));
  }
  Eigen::GeneralizedEigenSolver<Eigen::MatrixXd> solver(sys.A(), sys.E(),
                                                        false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("EigSolverFailed",
                         "generalized eigensolver did not converge");
  }
  std::vector<Complex> vals(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    vals[static_cast<std::size_t>(i)] =
        solver.alphas()(i) / Complex(solver.betas()(i), 0.0);
  }
  std::sort(vals.begin(), vals.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return vals;
}

DescriptorSystem generate_modal_system(int k_modes, double omega_min,
                                       double omega_max, double zeta_min,
                                       double zeta_max, int inputs,
                                       int outputs, std::uint64_t seed) {
  if (k_modes < 1) {
    throw InvalidRange("k_modes must be at least 1, got " +
                       std::to_string(k_modes));
  }
  if (inputs < 1 || outputs < 1) {
    throw InvalidRange("inputs and outputs must be at least 1");
  }
  if (!std::isfinite(omega_min) || !std::isfinite(omega_max) ||
      !(omega_min > 0.0) || !(omega_min <= omega_max)) {
    throw InvalidRange("need 0 < omega_min <= omega_max");
  }
  if (!std::isfinite(zeta_min) || !std::isfinite(zeta_max) ||
      !(zeta_min > 0.0) || !(zeta_min <= zeta_max) || !(zeta_max < 1.0)) {
    throw InvalidRange("need 0 < zeta_min <= zeta_max < 1");
  }

  const int n = 2 * k_modes;
  std::mt19937_64 gen(seed);

  std::vector<double> zeta(static_cast<std::size_t>(k_modes));
  for (int k = 0; k < k_modes; ++k) {
    zeta[static_cast<std::size_t>(k)] = uniform_draw(gen, zeta_min, zeta_max);
  }

  Eigen::MatrixXd B(n, inputs);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < inputs; ++j) B(i, j) = uniform_draw(gen, -1.0, 1.0);
  }
  Eigen::MatrixXd C(outputs, n);
  for (int i = 0; i < outputs; ++i) {
    for (int j = 0; j < n; ++j) C(i, j) = uniform_draw(gen, -1.0, 1.0);
  }

  const double lw = std::log10(omega_min);
  const double hw = std::log10(omega_max);
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < k_modes; ++k) {
    const double omega =
        k_modes == 1
            ? omega_min
            : std::pow(10.0, lw + k * (hw - lw) / (k_modes - 1));
    const double z = zeta[static_cast<std::size_t>(k)];
    A(2 * k, 2 * k + 1) = 1.0;
    A(2 * k + 1, 2 * k) = -omega * omega;
    A(2 * k + 1, 2 * k + 1) = -2.0 * z * omega;
  }

  return DescriptorSystem(Eigen::MatrixXd::Identity(n, n), std::move(A),
                          std::move(B), std::move(C));
}

DescriptorSystem load_system(const std::filesystem::path& path) {
  const detail::Json doc = detail::load_json_file(path);
  if (!doc.is_object()) {
    throw SchemaMismatch("system file must hold a JSON object");
  }
  const Eigen::Index n = detail::index_field(doc, "n");
  const Eigen::Index m = detail::index_field(doc, "m");
  const Eigen::Index p = detail::index_field(doc, "p");
  for (const char* key : {"E", "A", "B", "C", "D"}) {
    if (!doc.contains(key)) {
      throw SchemaMismatch(std::string("missing '") + key + "' matrix");
    }
  }
  return DescriptorSystem(detail::matrix_from_json(doc["E"], n, n, "E"),
                          detail::matrix_from_json(doc["A"], n, n, "A"),
                          detail::matrix_from_json(doc["B"], n, m, "B"),
                          detail::matrix_from_json(doc["C"], p, n, "C"),
                          detail::matrix_from_json(doc["D"], p, m, "D"));
}

void save_system(const DescriptorSystem& sys,
                 const std::filesystem::path& path) {
  detail::Json doc;
  doc["n"] = sys.order();
  doc["m"] = sys.inputs();
  doc["p"] = sys.outputs();
  doc["E"] = detail::matrix_to_json(sys.E());
  doc["A"] = detail::matrix_to_json(sys.A());
  doc["B"] = detail::matrix_to_json(sys.B());
  doc["C"] = detail::matrix_to_json(sys.C());
  doc["D"] = detail::matrix_to_json(sys.D());
  detail::save_json_file(doc, path);
}

}  // namespace loewner
