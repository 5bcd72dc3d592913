// Copyright (c) 2026 the loewner developers. See the top-level LICENSE file
// for details.
//
// SPDX-License-Identifier: Apache-2.0

#include "loewner/kernels.hpp"

#include <atomic>
#include <limits>
#include <sstream>
#include <utility>

#include "loewner/errors.hpp"

namespace loewner::kernels {
namespace {

constexpr double kSingularRcond = 1e-14;

// One (j,i) entry pair of the Loewner / shifted-Loewner matrices. Shared by
// the serial and OpenMP paths so they agree bit for bit.
inline void loewner_entry(const Eigen::VectorXcd& mu,
                          const Eigen::VectorXcd& lambda,
                          const Eigen::MatrixXcd& L, const Eigen::MatrixXcd& W,
                          const Eigen::MatrixXcd& V, const Eigen::MatrixXcd& R,
                          Eigen::Index j, Eigen::Index i, Complex& lw,
                          Complex& ls, bool& coincident) {
  const Complex den = mu(j) - lambda(i);
  if (den == Complex(0.0, 0.0)) {
    coincident = true;
    lw = ls = Complex(0.0, 0.0);
    return;
  }
  Complex vr(0.0, 0.0);
  for (Eigen::Index k = 0; k < R.rows(); ++k) vr += V(j, k) * R(k, i);
  Complex lwv(0.0, 0.0);
  for (Eigen::Index k = 0; k < W.rows(); ++k) lwv += L(j, k) * W(k, i);
  lw = (vr - lwv) / den;
  ls = (mu(j) * vr - lambda(i) * lwv) / den;
}

void check_assembly_shapes(const Eigen::VectorXcd& mu,
                           const Eigen::VectorXcd& lambda,
                           const Eigen::MatrixXcd& L, const Eigen::MatrixXcd& W,
                           const Eigen::MatrixXcd& V,
                           const Eigen::MatrixXcd& R) {
  const Eigen::Index nu = mu.size();
  const Eigen::Index rho = lambda.size();
  if (L.rows() != nu || V.rows() != nu || R.cols() != rho || W.cols() != rho ||
      L.cols() != W.rows() || V.cols() != R.rows()) {
    throw DimensionMismatch("tangential data shapes are inconsistent");
  }
}

std::string complex_to_string(Complex s) {
  std::ostringstream os;
  os << s.real();
  if (s.imag() != 0.0) os << (s.imag() < 0 ? " - " : " + ") << std::abs(s.imag()) << "i";
  return os.str();
}

// Factor (sE - A) once and apply it to B; rank deficiency means s is a pole.
Eigen::MatrixXcd transfer_at(const Eigen::MatrixXcd& E,
                             const Eigen::MatrixXcd& A,
                             const Eigen::MatrixXcd& B,
                             const Eigen::MatrixXcd& C,
                             const Eigen::MatrixXcd& D, Complex s) {
  Eigen::MatrixXcd pencil = s * E - A;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(pencil);
  const double rc = lu.rcond();
  if (!(rc > kSingularRcond)) {
    throw SingularPencil("(sE - A) is rank deficient at s = " +
                         complex_to_string(s) + " (rcond " +
                         std::to_string(rc) + ")");
  }
  Eigen::MatrixXcd H = C * lu.solve(B) + D;
  if (!H.allFinite()) {
    throw SingularPencil("transfer value not finite at s = " +
                         complex_to_string(s));
  }
  return H;
}

}  // namespace

void assemble_loewner_serial(const Eigen::VectorXcd& mu,
                             const Eigen::VectorXcd& lambda,
                             const Eigen::MatrixXcd& L,
                             const Eigen::MatrixXcd& W,
                             const Eigen::MatrixXcd& V,
                             const Eigen::MatrixXcd& R,
                             Eigen::MatrixXcd& loewner,
                             Eigen::MatrixXcd& shifted) {
  check_assembly_shapes(mu, lambda, L, W, V, R);
  const Eigen::Index nu = mu.size();
  const Eigen::Index rho = lambda.size();
  loewner.resize(nu, rho);
  shifted.resize(nu, rho);
  bool coincident = false;
  for (Eigen::Index j = 0; j < nu; ++j) {
    for (Eigen::Index i = 0; i < rho; ++i) {
      loewner_entry(mu, lambda, L, W, V, R, j, i, loewner(j, i), shifted(j, i),
                    coincident);
    }
  }
  if (coincident) {
    throw CoincidentPoints("some mu_j equals some lambda_i");
  }
}

void assemble_loewner_omp(const Eigen::VectorXcd& mu,
                          const Eigen::VectorXcd& lambda,
                          const Eigen::MatrixXcd& L, const Eigen::MatrixXcd& W,
                          const Eigen::MatrixXcd& V, const Eigen::MatrixXcd& R,
                          Eigen::MatrixXcd& loewner,
                          Eigen::MatrixXcd& shifted) {
  check_assembly_shapes(mu, lambda, L, W, V, R);
  const Eigen::Index nu = mu.size();
  const Eigen::Index rho = lambda.size();
  loewner.resize(nu, rho);
  shifted.resize(nu, rho);
  std::atomic<bool> coincident{false};
#pragma omp parallel for schedule(static)
  for (Eigen::Index j = 0; j < nu; ++j) {
    bool bad = false;
    for (Eigen::Index i = 0; i < rho; ++i) {
      loewner_entry(mu, lambda, L, W, V, R, j, i, loewner(j, i), shifted(j, i),
                    bad);
    }
    if (bad) coincident.store(true, std::memory_order_relaxed);
  }
  if (coincident.load()) {
    throw CoincidentPoints("some mu_j equals some lambda_i");
  }
}

std::vector<Eigen::MatrixXcd> sample_transfer_serial(
    const Eigen::MatrixXcd& E, const Eigen::MatrixXcd& A,
    const Eigen::MatrixXcd& B, const Eigen::MatrixXcd& C,
    const Eigen::MatrixXcd& D, const std::vector<Complex>& points) {
  std::vector<Eigen::MatrixXcd> values(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    values[k] = transfer_at(E, A, B, C, D, points[k]);
  }
  return values;
}

std::vector<Eigen::MatrixXcd> sample_transfer_omp(
    const Eigen::MatrixXcd& E, const Eigen::MatrixXcd& A,
    const Eigen::MatrixXcd& B, const Eigen::MatrixXcd& C,
    const Eigen::MatrixXcd& D, const std::vector<Complex>& points) {
  const std::int64_t count = static_cast<std::int64_t>(points.size());
  std::vector<Eigen::MatrixXcd> values(points.size());
  // Exceptions cannot cross the parallel region; remember the first failing
  // index and rethrow its error afterwards.
  std::atomic<std::int64_t> first_bad{count};
  std::vector<std::string> messages(points.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < count; ++k) {
    try {
      values[static_cast<std::size_t>(k)] =
          transfer_at(E, A, B, C, D, points[static_cast<std::size_t>(k)]);
    } catch (const SingularPencil& e) {
      messages[static_cast<std::size_t>(k)] = e.message();
      std::int64_t cur = first_bad.load();
      while (k < cur && !first_bad.compare_exchange_weak(cur, k)) {
      }
    }
  }
  const std::int64_t bad = first_bad.load();
  if (bad < count) {
    throw SingularPencil(messages[static_cast<std::size_t>(bad)]);
  }
  return values;
}

}  // namespace loewner::kernels
