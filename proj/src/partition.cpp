// Copyright (c) 2026 the loewner developers. See the top-level LICENSE file
// for details.
//
// SPDX-License-Identifier: Apache-2.0

#include "loewner/partition.hpp"

#include <cmath>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "detail/text_format.hpp"
#include "loewner/errors.hpp"

namespace loewner {
namespace {

std::string point_string(Complex s) {
  return detail::format_double(s.real()) + " + " +
         detail::format_double(s.imag()) + "i";
}

bool is_standard_basis_column(const Eigen::VectorXcd& v) {
  int ones = 0;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (v(k) == Complex(1.0, 0.0)) {
      ++ones;
    } else if (v(k) != Complex(0.0, 0.0)) {
      return false;
    }
  }
  return ones == 1;
}

struct ComplexKey {
  std::size_t operator()(const Complex& z) const {
    const std::hash<double> h;
    return h(z.real()) ^ (h(z.imag()) << 1);
  }
};

void check_distinct_points(const Eigen::VectorXcd& lambda,
                           const Eigen::VectorXcd& mu) {
  std::unordered_set<Complex, ComplexKey> right_set;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (!right_set.insert(lambda(i)).second) {
      throw DuplicateFrequency("right point " + point_string(lambda(i)) +
                               " repeats");
    }
  }
  std::unordered_set<Complex, ComplexKey> left_set;
  for (Eigen::Index j = 0; j < mu.size(); ++j) {
    if (!left_set.insert(mu(j)).second) {
      throw DuplicateFrequency("left point " + point_string(mu(j)) +
                               " repeats");
    }
    if (right_set.count(mu(j)) != 0) {
      throw CoincidentPoints("point " + point_string(mu(j)) +
                             " appears in both the right and left sets");
    }
  }
}

// Per-group realification blocks; `points` must list conjugate pairs
// adjacently, original first.
Eigen::MatrixXcd pairing_blocks(const Eigen::VectorXcd& points,
                                const char* side) {
  const Eigen::Index n = points.size();
  Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(n, n);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Eigen::Index k = 0;
  while (k < n) {
    if (points(k).imag() == 0.0) {
      J(k, k) = Complex(1.0, 0.0);
      ++k;
      continue;
    }
    if (k + 1 >= n || points(k + 1) != std::conj(points(k))) {
      throw PairingError(std::string(side) + " point " +
                         point_string(points(k)) +
                         " has no adjacent conjugate partner");
    }
    J(k, k) = Complex(inv_sqrt2, 0.0);
    J(k, k + 1) = Complex(inv_sqrt2, 0.0);
    J(k + 1, k) = Complex(0.0, inv_sqrt2);
    J(k + 1, k + 1) = Complex(0.0, -inv_sqrt2);
    k += 2;
  }
  return J;
}

}  // namespace

TangentialDataset::TangentialDataset(Eigen::VectorXcd lambda,
                                     Eigen::MatrixXcd R, Eigen::MatrixXcd W,
                                     Eigen::VectorXcd mu, Eigen::MatrixXcd L,
                                     Eigen::MatrixXcd V, bool conjugate_closed)
    : lambda_(std::move(lambda)),
      R_(std::move(R)),
      W_(std::move(W)),
      mu_(std::move(mu)),
      L_(std::move(L)),
      V_(std::move(V)),
      closed_(conjugate_closed) {
  const Eigen::Index rho = lambda_.size();
  const Eigen::Index nu = mu_.size();
  if (rho < 1 || nu < 1) {
    throw TooFewSamples("need at least one right and one left triple");
  }
  const Eigen::Index m = R_.rows();
  const Eigen::Index p = W_.rows();
  if (m < 1 || p < 1 || R_.cols() != rho || W_.cols() != rho ||
      L_.rows() != nu || L_.cols() != p || V_.rows() != nu || V_.cols() != m) {
    throw DimensionMismatch("packed tangential shapes are inconsistent");
  }
  if (!lambda_.allFinite() || !R_.allFinite() || !W_.allFinite() ||
      !mu_.allFinite() || !L_.allFinite() || !V_.allFinite()) {
    throw InvalidData("tangential data contains non-finite values");
  }
  for (Eigen::Index i = 0; i < rho; ++i) {
    if (!is_standard_basis_column(R_.col(i))) {
      throw InvalidData("right direction " + std::to_string(i) +
                        " is not a standard basis vector");
    }
  }
  for (Eigen::Index j = 0; j < nu; ++j) {
    if (!is_standard_basis_column(L_.row(j).transpose())) {
      throw InvalidData("left direction " + std::to_string(j) +
                        " is not a standard basis vector");
    }
  }
  check_distinct_points(lambda_, mu_);
}

TangentialDataset partition(const FrequencyResponseDataset& ds,
                            PartitionScheme scheme) {
  const Eigen::Index N = static_cast<Eigen::Index>(ds.size());
  if (N < 2) {
    throw TooFewSamples("partition needs at least 2 samples, got " +
                        std::to_string(N));
  }
  const Eigen::Index m = ds.inputs();
  const Eigen::Index p = ds.outputs();

  std::vector<Eigen::Index> right_idx, left_idx;
  if (scheme == PartitionScheme::kInterleave) {
    for (Eigen::Index k = 0; k < N; ++k) {
      (k % 2 == 0 ? right_idx : left_idx).push_back(k);
    }
  } else {
    const Eigen::Index rho = (N + 1) / 2;
    for (Eigen::Index k = 0; k < N; ++k) {
      (k < rho ? right_idx : left_idx).push_back(k);
    }
  }

  const Eigen::Index rho = static_cast<Eigen::Index>(right_idx.size());
  const Eigen::Index nu = static_cast<Eigen::Index>(left_idx.size());
  Eigen::VectorXcd lambda(rho);
  Eigen::MatrixXcd R = Eigen::MatrixXcd::Zero(m, rho);
  Eigen::MatrixXcd W(p, rho);
  for (Eigen::Index t = 0; t < rho; ++t) {
    const FrequencySample& sample = ds[static_cast<std::size_t>(right_idx[t])];
    lambda(t) = sample.s;
    R(t % m, t) = Complex(1.0, 0.0);
    W.col(t) = sample.H.col(t % m);
  }
  Eigen::VectorXcd mu(nu);
  Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(nu, p);
  Eigen::MatrixXcd V(nu, m);
  for (Eigen::Index t = 0; t < nu; ++t) {
    const FrequencySample& sample = ds[static_cast<std::size_t>(left_idx[t])];
    mu(t) = sample.s;
    L(t, t % p) = Complex(1.0, 0.0);
    V.row(t) = sample.H.row(t % p);
  }
  return TangentialDataset(std::move(lambda), std::move(R), std::move(W),
                           std::move(mu), std::move(L), std::move(V), false);
}

TangentialDataset conjugate_close(const TangentialDataset& td) {
  if (td.conjugate_closed()) return td;
  for (Eigen::Index i = 0; i < td.rho(); ++i) {
    if (td.lambda()(i).real() != 0.0) {
      throw NotImaginaryAxis("right point " + point_string(td.lambda()(i)) +
                             " is off the imaginary axis");
    }
  }
  for (Eigen::Index j = 0; j < td.nu(); ++j) {
    if (td.mu()(j).real() != 0.0) {
      throw NotImaginaryAxis("left point " + point_string(td.mu()(j)) +
                             " is off the imaginary axis");
    }
  }

  std::vector<Eigen::Index> right_src, left_src;
  std::vector<bool> right_conj, left_conj;
  for (Eigen::Index i = 0; i < td.rho(); ++i) {
    right_src.push_back(i);
    right_conj.push_back(false);
    if (td.lambda()(i).imag() != 0.0) {
      right_src.push_back(i);
      right_conj.push_back(true);
    }
  }
  for (Eigen::Index j = 0; j < td.nu(); ++j) {
    left_src.push_back(j);
    left_conj.push_back(false);
    if (td.mu()(j).imag() != 0.0) {
      left_src.push_back(j);
      left_conj.push_back(true);
    }
  }

  const Eigen::Index rho = static_cast<Eigen::Index>(right_src.size());
  const Eigen::Index nu = static_cast<Eigen::Index>(left_src.size());
  Eigen::VectorXcd lambda(rho);
  Eigen::MatrixXcd R(td.inputs(), rho), W(td.outputs(), rho);
  for (Eigen::Index t = 0; t < rho; ++t) {
    const Eigen::Index i = right_src[static_cast<std::size_t>(t)];
    if (right_conj[static_cast<std::size_t>(t)]) {
      lambda(t) = std::conj(td.lambda()(i));
      R.col(t) = td.R().col(i).conjugate();
      W.col(t) = td.W().col(i).conjugate();
    } else {
      lambda(t) = td.lambda()(i);
      R.col(t) = td.R().col(i);
      W.col(t) = td.W().col(i);
    }
  }
  Eigen::VectorXcd mu(nu);
  Eigen::MatrixXcd L(nu, td.outputs()), V(nu, td.inputs());
  for (Eigen::Index t = 0; t < nu; ++t) {
    const Eigen::Index j = left_src[static_cast<std::size_t>(t)];
    if (left_conj[static_cast<std::size_t>(t)]) {
      mu(t) = std::conj(td.mu()(j));
      L.row(t) = td.L().row(j).conjugate();
      V.row(t) = td.V().row(j).conjugate();
    } else {
      mu(t) = td.mu()(j);
      L.row(t) = td.L().row(j);
      V.row(t) = td.V().row(j);
    }
  }
  return TangentialDataset(std::move(lambda), std::move(R), std::move(W),
                           std::move(mu), std::move(L), std::move(V), true);
}

RealifyTransform realify(const TangentialDataset& td) {
  if (!td.conjugate_closed()) {
    throw PairingError("dataset is not conjugate-closed");
  }
  return RealifyTransform(pairing_blocks(td.mu(), "left"),
                          pairing_blocks(td.lambda(), "right"));
}

}  // namespace loewner
