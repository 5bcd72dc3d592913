// Copyright (c) 2026 the loewner developers. See the top-level LICENSE file
// for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef LOEWNER_KERNELS_HPP
#define LOEWNER_KERNELS_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace loewner {

using Complex = std::complex<double>;

namespace kernels {

// Loewner / shifted-Loewner assembly from packed tangential data:
//   loewner(j,i) = (v_j r_i - l_j w_i) / (mu_j - lambda_i)
//   shifted(j,i) = (mu_j v_j r_i - lambda_i l_j w_i) / (mu_j - lambda_i)
// with v_j = V.row(j), l_j = L.row(j), r_i = R.col(i), w_i = W.col(i).
// Throws CoincidentPoints if any mu_j == lambda_i.
//
// The _serial variant is the reference implementation; _omp runs the same
// per-entry arithmetic with the row loop parallelized, so both produce
// bit-identical results.
void assemble_loewner_serial(const Eigen::VectorXcd& mu,
                             const Eigen::VectorXcd& lambda,
                             const Eigen::MatrixXcd& L,
                             const Eigen::MatrixXcd& W,
                             const Eigen::MatrixXcd& V,
                             const Eigen::MatrixXcd& R,
                             Eigen::MatrixXcd& loewner,
                             Eigen::MatrixXcd& shifted);

void assemble_loewner_omp(const Eigen::VectorXcd& mu,
                          const Eigen::VectorXcd& lambda,
                          const Eigen::MatrixXcd& L,
                          const Eigen::MatrixXcd& W,
                          const Eigen::MatrixXcd& V,
                          const Eigen::MatrixXcd& R,
                          Eigen::MatrixXcd& loewner,
                          Eigen::MatrixXcd& shifted);

// Transfer-function sweep of a (possibly complex) descriptor realization:
// value k is C (s_k E - A)^{-1} B + D, each via one dense LU factorization.
// Throws SingularPencil when some s_k is numerically a pole. Points are
// independent; _omp distributes them over threads and reports the error of
// the lowest failing index, matching the serial behaviour.
std::vector<Eigen::MatrixXcd> sample_transfer_serial(
    const Eigen::MatrixXcd& E, const Eigen::MatrixXcd& A,
    const Eigen::MatrixXcd& B, const Eigen::MatrixXcd& C,
    const Eigen::MatrixXcd& D, const std::vector<Complex>& points);

std::vector<Eigen::MatrixXcd> sample_transfer_omp(
    const Eigen::MatrixXcd& E, const Eigen::MatrixXcd& A,
    const Eigen::MatrixXcd& B, const Eigen::MatrixXcd& C,
    const Eigen::MatrixXcd& D, const std::vector<Complex>& points);

}  // namespace kernels
}  // namespace loewner

#endif  // LOEWNER_KERNELS_HPP
