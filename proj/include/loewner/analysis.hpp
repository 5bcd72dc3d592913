// Copyright (c) 2026 the loewner developers. See the top-level LICENSE file
// for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef LOEWNER_ANALYSIS_HPP
#define LOEWNER_ANALYSIS_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "loewner/dataset.hpp"
#include "loewner/pencil.hpp"

namespace loewner {

struct FrequencyError {
  double omega;     // Im(s) of the sample
  double relative;  // |G - H|_2 / |H|_2, matrix 2-norm at this frequency
};

struct ErrorReport {
  std::vector<FrequencyError> per_frequency;
  double epsilon;  // global stacked-vector 2-norm ratio
  Eigen::Index order;
  std::vector<std::string> notes;
};

/// epsilon = |g - h|_2 / |h|_2 where g, h stack every entry of every
/// G_i = Ht(s_i) and H_i over the whole dataset; per_frequency holds the
/// matrix-wise ratios. Notes report the count of unstable reduced poles.
ErrorReport relative_error(const FrequencyResponseDataset& ds,
                           const ReducedModel& model);

struct SweepEntry {
  int order;
  double epsilon;      // NaN when skipped
  std::string status;  // "ok" or the error kind that skipped this order
};

/// reduce + relative_error for every requested order. Failures at one order
/// (SingularEt and friends) are recorded in that entry and never abort the
/// sweep. Orders are processed independently; output order matches input.
std::vector<SweepEntry> error_sweep(const LoewnerPencil& pencil,
                                    const PencilSVD& svd,
                                    const FrequencyResponseDataset& ds,
                                    const std::vector<int>& orders);

/// CSV `omega,|H|,|G|,argH,argG`, one row per output-input channel per
/// frequency (channels row-major), phases in (-pi, pi]. Empty dataset gives
/// a header-only file.
void write_response_table(const FrequencyResponseDataset& ds,
                          const ReducedModel& model,
                          const std::filesystem::path& path);

/// CSV `r,epsilon,status`; skipped entries carry epsilon "nan".
void write_sweep_csv(const std::vector<SweepEntry>& entries,
                     const std::filesystem::path& path);

/// CSV `k,sigma` with 1-based k.
void write_singular_values_csv(const Eigen::VectorXd& sigma,
                               const std::filesystem::path& path);

/// JSON mirror of ErrorReport.
void write_error_report_json(const ErrorReport& report,
                             const std::filesystem::path& path);

}  // namespace loewner

#endif  // LOEWNER_ANALYSIS_HPP
