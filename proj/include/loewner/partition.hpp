// Copyright (c) 2026 the loewner developers. See the top-level LICENSE file
// for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef LOEWNER_PARTITION_HPP
#define LOEWNER_PARTITION_HPP

#include <Eigen/Dense>

#include "loewner/dataset.hpp"

namespace loewner {

enum class PartitionScheme {
  kInterleave,  // even sample positions right, odd left
  kHalfSplit,   // first ceil(N/2) right, rest left
};

/// Right triples (lambda_i, r_i, w_i) and left triples (mu_j, l_j, v_j) in
/// packed form:
///   lambda: rho    R: m x rho (columns r_i)   W: p x rho (columns w_i)
///   mu:     nu     L: nu x p  (rows l_j)      V: nu x m  (rows v_j)
/// Direction vectors are standard basis vectors. The constructor enforces
/// distinctness of lambda, of mu, and disjointness of the two point sets,
/// so every Loewner denominator mu_j - lambda_i is nonzero.
class TangentialDataset {
 public:
  TangentialDataset(Eigen::VectorXcd lambda, Eigen::MatrixXcd R,
                    Eigen::MatrixXcd W, Eigen::VectorXcd mu,
                    Eigen::MatrixXcd L, Eigen::MatrixXcd V,
                    bool conjugate_closed);

  const Eigen::VectorXcd& lambda() const { return lambda_; }
  const Eigen::MatrixXcd& R() const { return R_; }
  const Eigen::MatrixXcd& W() const { return W_; }
  const Eigen::VectorXcd& mu() const { return mu_; }
  const Eigen::MatrixXcd& L() const { return L_; }
  const Eigen::MatrixXcd& V() const { return V_; }

  Eigen::MatrixXcd Lambda() const { return lambda_.asDiagonal(); }
  Eigen::MatrixXcd M() const { return mu_.asDiagonal(); }

  Eigen::Index rho() const { return lambda_.size(); }
  Eigen::Index nu() const { return mu_.size(); }
  Eigen::Index inputs() const { return R_.rows(); }
  Eigen::Index outputs() const { return W_.rows(); }
  bool conjugate_closed() const { return closed_; }

 private:
  Eigen::VectorXcd lambda_;
  Eigen::MatrixXcd R_, W_;
  Eigen::VectorXcd mu_;
  Eigen::MatrixXcd L_, V_;
  bool closed_;
};

/// Splits a dataset (N >= 2) into right and left interpolation data.
/// Directions cycle through identity columns and rows: sample number t
/// within its group gets r = e_{t mod m} (right) or l = e_{t mod p}^T
/// (left), and w_i = H(lambda_i) r_i, v_j = l_j H(mu_j).
TangentialDataset partition(const FrequencyResponseDataset& ds,
                            PartitionScheme scheme);

/// Appends the conjugate of every triple with Im != 0 directly after the
/// original, within its group; omega = 0 points are self-conjugate and stay
/// single. Requires all points on the imaginary axis. Already-closed data
/// passes through unchanged.
TangentialDataset conjugate_close(const TangentialDataset& td);

/// Block-unitary change of basis built from conjugate-closed data: one 2x2
/// block (1/sqrt(2)) [[1, 1], [i, -i]] per adjacent conjugate pair and a
/// 1x1 identity per self-conjugate point, for each of the left (nu) and
/// right (rho) sides. Applying
///   Lw -> J_left Lw J_right*,  V -> J_left V,  W -> W J_right*
/// makes every entry real up to roundoff.
class RealifyTransform {
 public:
  RealifyTransform(Eigen::MatrixXcd left, Eigen::MatrixXcd right)
      : left_(std::move(left)), right_(std::move(right)) {}

  const Eigen::MatrixXcd& left() const { return left_; }
  const Eigen::MatrixXcd& right() const { return right_; }

 private:
  Eigen::MatrixXcd left_, right_;
};

RealifyTransform realify(const TangentialDataset& td);

}  // namespace loewner

#endif  // LOEWNER_PARTITION_HPP
