// Copyright (c) 2026 the loewner developers. See the top-level LICENSE file
// for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef LOEWNER_DESCRIPTOR_SYSTEM_HPP
#define LOEWNER_DESCRIPTOR_SYSTEM_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <vector>

namespace loewner {

using Complex = std::complex<double>;

/// Descriptor LTI system (E, A, B, C, D) with invertible E. Immutable after
/// construction; all operations on it are pure functions, safe to call from
/// several threads at once.
class DescriptorSystem {
 public:
  /// D defaults to the zero matrix.
  DescriptorSystem(Eigen::MatrixXd E, Eigen::MatrixXd A, Eigen::MatrixXd B,
                   Eigen::MatrixXd C);
  DescriptorSystem(Eigen::MatrixXd E, Eigen::MatrixXd A, Eigen::MatrixXd B,
                   Eigen::MatrixXd C, Eigen::MatrixXd D);

  const Eigen::MatrixXd& E() const { return E_; }
  const Eigen::MatrixXd& A() const { return A_; }
  const Eigen::MatrixXd& B() const { return B_; }
  const Eigen::MatrixXd& C() const { return C_; }
  const Eigen::MatrixXd& D() const { return D_; }

  Eigen::Index order() const { return E_.rows(); }
  Eigen::Index inputs() const { return B_.cols(); }
  Eigen::Index outputs() const { return C_.rows(); }

 private:
  void validate() const;

  Eigen::MatrixXd E_, A_, B_, C_, D_;
};

/// H(s) = C (sE - A)^{-1} B + D via a dense LU solve (no explicit inverse).
/// Throws SingularPencil when s is numerically a generalized eigenvalue of
/// (A, E).
Eigen::MatrixXcd eval_transfer(const DescriptorSystem& sys, Complex s);

/// Generalized eigenvalues of the pencil (A, E), i.e. the poles of H, sorted
/// by (real, imag). Dense eigensolve, guarded at order <= 2000.
std::vector<Complex> poles(const DescriptorSystem& sys);

/// Synthetic structural benchmark: k_modes second-order blocks
/// [[0, 1], [-w_k^2, -2 z_k w_k]] on the diagonal of A, E = I, with w_k
/// log-spaced in [omega_min, omega_max], z_k uniform in [zeta_min, zeta_max],
/// and B, C entries uniform in [-1, 1]. All draws come from a mt19937_64
/// stream, so equal seeds give bit-identical systems. Every pole has
/// strictly negative real part.
DescriptorSystem generate_modal_system(int k_modes, double omega_min,
                                       double omega_max, double zeta_min,
                                       double zeta_max, int inputs,
                                       int outputs, std::uint64_t seed);

/// JSON round-trip of a system file:
/// {"n":..,"m":..,"p":..,"E":[[..]],"A":..,"B":..,"C":..,"D":..}
/// Doubles use shortest round-trip formatting; read-after-write is exact.
DescriptorSystem load_system(const std::filesystem::path& path);
void save_system(const DescriptorSystem& sys,
                 const std::filesystem::path& path);

}  // namespace loewner

#endif  // LOEWNER_DESCRIPTOR_SYSTEM_HPP
