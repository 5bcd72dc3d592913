// Copyright (c) 2026 the loewner developers. See the top-level LICENSE file
// for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef LOEWNER_DATASET_HPP
#define LOEWNER_DATASET_HPP

#include <Eigen/Dense>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "loewner/descriptor_system.hpp"

namespace loewner {

/// One frequency point with its p x m transfer-function value. Measured data
/// lives on the imaginary axis (s = i omega); general complex s is allowed
/// when built programmatically.
struct FrequencySample {
  Complex s;
  Eigen::MatrixXcd H;
};

/// Ordered collection of samples sharing one (p, m) shape. The constructor
/// sorts by ascending |Im s|, then Im s, then Re s, and rejects duplicate
/// frequencies, so the ordering invariant holds from birth.
class FrequencyResponseDataset {
 public:
  FrequencyResponseDataset(std::vector<FrequencySample> samples,
                           Eigen::Index outputs, Eigen::Index inputs);

  const std::vector<FrequencySample>& samples() const { return samples_; }
  const FrequencySample& operator[](std::size_t i) const {
    return samples_[i];
  }
  std::size_t size() const { return samples_.size(); }
  Eigen::Index outputs() const { return outputs_; }
  Eigen::Index inputs() const { return inputs_; }

  std::vector<Complex> points() const;

  /// Free-form provenance notes (source, units). Not serialized.
  std::map<std::string, std::string> metadata;

 private:
  std::vector<FrequencySample> samples_;
  Eigen::Index outputs_;
  Eigen::Index inputs_;
};

/// Evaluates sys at s = i omega for every listed omega (all finite, >= 0,
/// pairwise distinct). Points are independent and evaluated in parallel.
/// Throws PoleHit when some i omega is a pole of sys.
FrequencyResponseDataset sample_frequency_response(
    const DescriptorSystem& sys, const std::vector<double>& omegas);

/// SISO view of one (output, input) channel; frequencies unchanged.
FrequencyResponseDataset extract_node(const FrequencyResponseDataset& ds,
                                      Eigen::Index out_idx,
                                      Eigen::Index in_idx);

/// File formats, chosen by extension:
///   .csv  SISO only, header `omega,re,im`, one sample per row, s = i omega.
///   .json MIMO, {"m":..,"p":..,"samples":[{"omega":..,"H_re":[[..]],
///         "H_im":[[..]]},..]}.
/// Doubles use shortest round-trip formatting; write-then-read is exact.
/// Only imaginary-axis data can be written.
FrequencyResponseDataset read_dataset(const std::filesystem::path& path);
void write_dataset(const FrequencyResponseDataset& ds,
                   const std::filesystem::path& path);

}  // namespace loewner

#endif  // LOEWNER_DATASET_HPP
