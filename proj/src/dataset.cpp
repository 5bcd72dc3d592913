// Copyright (c) 2026 the loewner developers. See the top-level LICENSE file
// for details.
//
// SPDX-License-Identifier: Apache-2.0

#include "loewner/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "detail/json_io.hpp"
#include "detail/text_format.hpp"
#include "loewner/errors.hpp"
#include "loewner/kernels.hpp"

namespace loewner {
namespace {

bool sample_before(const FrequencySample& a, const FrequencySample& b) {
  const double abs_a = std::abs(a.s.imag());
  const double abs_b = std::abs(b.s.imag());
  if (abs_a != abs_b) return abs_a < abs_b;
  if (a.s.imag() != b.s.imag()) return a.s.imag() < b.s.imag();
  return a.s.real() < b.s.real();
}

std::string omega_string(double omega) {
  return detail::format_double(omega);
}

void require_imaginary_axis(const FrequencyResponseDataset& ds,
                            const char* action) {
  for (const FrequencySample& sample : ds.samples()) {
    if (sample.s.real() != 0.0) {
      throw NotImaginaryAxis(std::string(action) +
                             " requires s = i*omega samples; found Re(s) = " +
                             detail::format_double(sample.s.real()));
    }
  }
}

FrequencyResponseDataset read_dataset_csv(const std::filesystem::path& path) {
  const std::string text = detail::read_text_file(path);
  std::vector<std::string_view> lines;
  {
    std::string_view rest = text;
    while (!rest.empty()) {
      const std::size_t nl = rest.find('\n');
      lines.push_back(rest.substr(0, nl));
      if (nl == std::string_view::npos) break;
      rest.remove_prefix(nl + 1);
    }
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines[0] != "omega,re,im") {
    throw ParseError("'" + path.string() +
                     "' line 1: expected header 'omega,re,im'");
  }
  std::vector<FrequencySample> samples;
  samples.reserve(lines.size() - 1);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const std::string where =
        "'" + path.string() + "' line " + std::to_string(k + 1);
    const auto fields = detail::split_fields(lines[k], ',');
    if (fields.size() != 3) {
      throw ParseError(where + ": expected 3 fields, got " +
                       std::to_string(fields.size()));
    }
    const double omega = detail::parse_double_strict(fields[0], where);
    const double re = detail::parse_double_strict(fields[1], where);
    const double im = detail::parse_double_strict(fields[2], where);
    Eigen::MatrixXcd H(1, 1);
    H(0, 0) = Complex(re, im);
    samples.push_back({Complex(0.0, omega), std::move(H)});
  }
  return FrequencyResponseDataset(std::move(samples), 1, 1);
}

FrequencyResponseDataset read_dataset_json(const std::filesystem::path& path) {
  const detail::Json doc = detail::load_json_file(path);
  if (!doc.is_object()) {
    throw SchemaMismatch("dataset file must hold a JSON object");
  }
  const Eigen::Index m = detail::index_field(doc, "m");
  const Eigen::Index p = detail::index_field(doc, "p");
  if (!doc.contains("samples") || !doc["samples"].is_array()) {
    throw SchemaMismatch("missing 'samples' array");
  }
  std::vector<FrequencySample> samples;
  samples.reserve(doc["samples"].size());
  std::size_t k = 0;
  for (const detail::Json& rec : doc["samples"]) {
    const std::string where = "samples[" + std::to_string(k) + "]";
    if (!rec.is_object() || !rec.contains("omega") ||
        !rec["omega"].is_number() || !rec.contains("H_re") ||
        !rec.contains("H_im")) {
      throw SchemaMismatch(where +
                           " must be {omega, H_re, H_im} with numeric omega");
    }
    const double omega = rec["omega"].get<double>();
    Eigen::MatrixXcd H(p, m);
    H.real() = detail::matrix_from_json(rec["H_re"], p, m, where + ".H_re");
    H.imag() = detail::matrix_from_json(rec["H_im"], p, m, where + ".H_im");
    samples.push_back({Complex(0.0, omega), std::move(H)});
    ++k;
  }
  return FrequencyResponseDataset(std::move(samples), p, m);
}

}  // namespace

FrequencyResponseDataset::FrequencyResponseDataset(
    std::vector<FrequencySample> samples, Eigen::Index outputs,
    Eigen::Index inputs)
    : samples_(std::move(samples)), outputs_(outputs), inputs_(inputs) {
  if (outputs_ < 1 || inputs_ < 1) {
    throw DimensionMismatch("dataset needs outputs >= 1 and inputs >= 1");
  }
  for (std::size_t k = 0; k < samples_.size(); ++k) {
    const FrequencySample& sample = samples_[k];
    if (sample.H.rows() != outputs_ || sample.H.cols() != inputs_) {
      throw DimensionMismatch(
          "sample " + std::to_string(k) + " has shape " +
          std::to_string(sample.H.rows()) + "x" +
          std::to_string(sample.H.cols()) + ", expected " +
          std::to_string(outputs_) + "x" + std::to_string(inputs_));
    }
    if (!std::isfinite(sample.s.real()) || !std::isfinite(sample.s.imag()) ||
        !sample.H.allFinite()) {
      throw InvalidData("sample " + std::to_string(k) +
                        " contains non-finite values");
    }
  }
  std::sort(samples_.begin(), samples_.end(), sample_before);
  for (std::size_t k = 1; k < samples_.size(); ++k) {
    if (samples_[k].s == samples_[k - 1].s) {
      throw DuplicateFrequency("duplicate frequency s = " +
                               detail::format_double(samples_[k].s.real()) +
                               " + " +
                               detail::format_double(samples_[k].s.imag()) +
                               "i");
    }
  }
}

std::vector<Complex> FrequencyResponseDataset::points() const {
  std::vector<Complex> pts(samples_.size());
  for (std::size_t k = 0; k < samples_.size(); ++k) pts[k] = samples_[k].s;
  return pts;
}

FrequencyResponseDataset sample_frequency_response(
    const DescriptorSystem& sys, const std::vector<double>& omegas) {
  std::vector<double> sorted = omegas;
  for (double w : sorted) {
    if (!std::isfinite(w) || w < 0.0) {
      throw InvalidRange("frequencies must be finite and >= 0, got " +
                         omega_string(w));
    }
  }
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (sorted[k] == sorted[k - 1]) {
      throw DuplicateFrequency("omega = " + omega_string(sorted[k]) +
                               " appears more than once");
    }
  }
  std::vector<Complex> points(sorted.size());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    points[k] = Complex(0.0, sorted[k]);
  }
  std::vector<Eigen::MatrixXcd> values;
  try {
    values = kernels::sample_transfer_omp(
        sys.E().cast<Complex>(), sys.A().cast<Complex>(),
        sys.B().cast<Complex>(), sys.C().cast<Complex>(),
        sys.D().cast<Complex>(), points);
  } catch (const SingularPencil& e) {
    throw PoleHit(e.message());
  }
  std::vector<FrequencySample> samples(sorted.size());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    samples[k] = {points[k], std::move(values[k])};
  }
  return FrequencyResponseDataset(std::move(samples), sys.outputs(),
                                  sys.inputs());
}

FrequencyResponseDataset extract_node(const FrequencyResponseDataset& ds,
                                      Eigen::Index out_idx,
                                      Eigen::Index in_idx) {
  if (out_idx < 0 || out_idx >= ds.outputs() || in_idx < 0 ||
      in_idx >= ds.inputs()) {
    throw IndexOutOfRange("node (" + std::to_string(out_idx) + "," +
                          std::to_string(in_idx) + ") outside " +
                          std::to_string(ds.outputs()) + "x" +
                          std::to_string(ds.inputs()));
  }
  std::vector<FrequencySample> samples(ds.size());
  for (std::size_t k = 0; k < ds.size(); ++k) {
    Eigen::MatrixXcd H(1, 1);
    H(0, 0) = ds[k].H(out_idx, in_idx);
    samples[k] = {ds[k].s, std::move(H)};
  }
  FrequencyResponseDataset out(std::move(samples), 1, 1);
  out.metadata = ds.metadata;
  return out;
}

FrequencyResponseDataset read_dataset(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".csv") return read_dataset_csv(path);
  if (ext == ".json") return read_dataset_json(path);
  throw ParseError("unknown dataset extension '" + ext +
                   "' (expected .csv or .json)");
}

void write_dataset(const FrequencyResponseDataset& ds,
                   const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".csv") {
    if (ds.outputs() != 1 || ds.inputs() != 1) {
      throw SchemaMismatch("CSV datasets are SISO; this one is " +
                           std::to_string(ds.outputs()) + "x" +
                           std::to_string(ds.inputs()) +
                           " (write JSON instead)");
    }
    require_imaginary_axis(ds, "writing CSV");
    std::string out = "omega,re,im\n";
    for (const FrequencySample& sample : ds.samples()) {
      out += detail::format_double(sample.s.imag());
      out += ',';
      out += detail::format_double(sample.H(0, 0).real());
      out += ',';
      out += detail::format_double(sample.H(0, 0).imag());
      out += '\n';
    }
    detail::write_file_atomic(path, out);
    return;
  }
  if (ext == ".json") {
    require_imaginary_axis(ds, "writing JSON");
    detail::Json doc;
    doc["m"] = ds.inputs();
    doc["p"] = ds.outputs();
    detail::Json records = detail::Json::array();
    for (const FrequencySample& sample : ds.samples()) {
      detail::Json rec;
      rec["omega"] = sample.s.imag();
      rec["H_re"] = detail::matrix_to_json(sample.H.real());
      rec["H_im"] = detail::matrix_to_json(sample.H.imag());
      records.push_back(std::move(rec));
    }
    doc["samples"] = std::move(records);
    detail::save_json_file(doc, path);
    return;
  }
  throw ParseError("unknown dataset extension '" + ext +
                   "' (expected .csv or .json)");
}

}  // namespace loewner
