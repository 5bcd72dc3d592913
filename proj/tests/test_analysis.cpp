// Copyright (c) 2026 the loewner developers. See the top-level LICENSE file
// for details.
//
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "test_utils.hpp"

using loewner::Complex;
using loewner::DescriptorSystem;
using loewner::ErrorReport;
using loewner::FrequencyResponseDataset;
using loewner::LoewnerPencil;
using loewner::PartitionScheme;
using loewner::PencilSVD;
using loewner::ReducedModel;
using loewner::SweepEntry;

namespace {

// A ready-to-compare pair: dataset sampled from sys, pencil built on a
// disjoint grid, model of full rank.
struct Fixture {
  DescriptorSystem sys;
  FrequencyResponseDataset held_out;
  LoewnerPencil pencil;
  PencilSVD svd;
  int rank;
};

Fixture make_fixture(int modes, int m, int p, unsigned seed) {
  DescriptorSystem sys = loewner::generate_modal_system(
      modes, 0.5, 50.0, 0.05, 0.3, m, p, seed);
  const FrequencyResponseDataset train = loewner::sample_frequency_response(
      sys, testutil::log_spaced(0.1, 100.0, 8 * modes + 10));
  FrequencyResponseDataset held_out = loewner::sample_frequency_response(
      sys, testutil::log_spaced(0.15, 90.0, 60));
  LoewnerPencil pencil = loewner::build_pencil(
      loewner::conjugate_close(
          loewner::partition(train, PartitionScheme::kInterleave)),
      true);
  PencilSVD svd = loewner::svd_pencil(pencil);
  const int rank =
      loewner::select_order(svd, loewner::OrderPolicy(1e-10));
  return {std::move(sys), std::move(held_out), std::move(pencil),
          std::move(svd), rank};
}

ReducedModel scaled_copy(const ReducedModel& model, double c_scale,
                         double b_scale) {
  return ReducedModel(model.E(), model.A(), b_scale * model.B(),
                      c_scale * model.C(), model.sigma(), model.is_real());
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("exact recovery scores a tiny epsilon") {
  const Fixture fix = make_fixture(3, 2, 2, 31);
  CHECK(fix.rank == 6);
  const ReducedModel model = loewner::reduce(fix.pencil, fix.svd, fix.rank);
  const ErrorReport report = loewner::relative_error(fix.held_out, model);
  CHECK(report.epsilon <= 1e-8);
  CHECK(report.order == 6);
  REQUIRE(report.per_frequency.size() == fix.held_out.size());
  for (std::size_t k = 0; k < report.per_frequency.size(); ++k) {
    CHECK(report.per_frequency[k].relative <= 1e-7);
    CHECK(report.per_frequency[k].omega ==
          fix.held_out[k].s.imag());
  }
  REQUIRE(report.notes.size() == 1);
  CHECK(report.notes[0] == "unstable_poles=0");
}

TEST_CASE("a zero model has relative error exactly one") {
  const Fixture fix = make_fixture(2, 1, 1, 32);
  const ReducedModel model = loewner::reduce(fix.pencil, fix.svd, fix.rank);
  const ReducedModel zero = scaled_copy(model, 1.0, 0.0);
  const ErrorReport report = loewner::relative_error(fix.held_out, zero);
  CHECK(report.epsilon == 1.0);
  for (const auto& fe : report.per_frequency) CHECK(fe.relative == 1.0);
}

TEST_CASE("doubling the response also gives error one") {
  const Fixture fix = make_fixture(2, 1, 1, 33);
  const ReducedModel model = loewner::reduce(fix.pencil, fix.svd, fix.rank);
  const ReducedModel twice = scaled_copy(model, 2.0, 1.0);
  std::vector<loewner::FrequencySample> samples;
  for (double w : testutil::log_spaced(0.2, 40.0, 30)) {
    samples.push_back({Complex(0, w),
                       loewner::eval_transfer(model, Complex(0, w))});
  }
  const FrequencyResponseDataset exact(samples, model.outputs(),
                                       model.inputs());
  const ErrorReport doubled = loewner::relative_error(exact, twice);
  CHECK(doubled.epsilon == 1.0);
  const ErrorReport same = loewner::relative_error(exact, model);
  CHECK(same.epsilon == 0.0);
  for (const auto& fe : same.per_frequency) CHECK(fe.relative == 0.0);
}

TEST_CASE("epsilon is invariant under common scaling") {
  const Fixture fix = make_fixture(2, 2, 1, 34);
  const ReducedModel model = loewner::reduce(fix.pencil, fix.svd, fix.rank);
  const ReducedModel off = scaled_copy(model, 1.0 + 1e-3, 1.0);
  const ErrorReport a = loewner::relative_error(fix.held_out, off);
  CHECK(a.epsilon == doctest::Approx(1e-3).epsilon(1e-6));
}

TEST_CASE("shape mismatch between data and model is rejected") {
  const Fixture fix = make_fixture(2, 2, 2, 35);
  const ReducedModel model = loewner::reduce(fix.pencil, fix.svd, fix.rank);
  const FrequencyResponseDataset siso =
      loewner::extract_node(fix.held_out, 0, 0);
  CHECK_THROWS_AS(loewner::relative_error(siso, model),
                  loewner::DimensionMismatch);
}

TEST_CASE("evaluating the model on one of its poles reports PoleHit") {
  Eigen::MatrixXcd one(1, 1), zero(1, 1);
  one(0, 0) = Complex(1, 0);
  zero(0, 0) = Complex(0, 0);
  const ReducedModel integrator(one, zero, one, one, Eigen::VectorXd(), true);
  std::vector<loewner::FrequencySample> samples;
  Eigen::MatrixXcd H(1, 1);
  H(0, 0) = Complex(1, 0);
  samples.push_back({Complex(0, 0), H});
  samples.push_back({Complex(0, 1), H});
  const FrequencyResponseDataset ds(samples, 1, 1);
  CHECK_THROWS_AS(loewner::relative_error(ds, integrator), loewner::PoleHit);
}

TEST_CASE("unstable reduced poles are counted in the notes") {
  Eigen::MatrixXcd E(2, 2), A(2, 2), B(2, 1), C(1, 2);
  E.setIdentity();
  A.setZero();
  A(0, 0) = Complex(1, 0);
  A(1, 1) = Complex(-2, 0);
  B.setOnes();
  C.setOnes();
  const ReducedModel model(E, A, B, C, Eigen::VectorXd(), true);
  std::vector<loewner::FrequencySample> samples;
  for (double w : {1.0, 2.0}) {
    samples.push_back({Complex(0, w),
                       loewner::eval_transfer(model, Complex(0, w))});
  }
  const ErrorReport report =
      loewner::relative_error(FrequencyResponseDataset(samples, 1, 1), model);
  REQUIRE(report.notes.size() == 1);
  CHECK(report.notes[0] == "unstable_poles=1");
}

TEST_CASE("sweeps agree with single reductions and improve with order") {
  const Fixture fix = make_fixture(6, 1, 1, 36);
  REQUIRE(fix.rank == 12);
  const std::vector<SweepEntry> sweep =
      loewner::error_sweep(fix.pencil, fix.svd, fix.held_out, {4, 8, 12});
  REQUIRE(sweep.size() == 3);
  for (const SweepEntry& entry : sweep) CHECK(entry.status == "ok");
  CHECK(sweep[0].order == 4);
  CHECK(sweep[2].order == 12);
  CHECK(sweep[2].epsilon < sweep[0].epsilon);

  const ReducedModel direct = loewner::reduce(fix.pencil, fix.svd, 8);
  const ErrorReport report = loewner::relative_error(fix.held_out, direct);
  CHECK(sweep[1].epsilon == report.epsilon);
}

TEST_CASE("sweep entries record failures without aborting") {
  Eigen::VectorXcd lambda(2), mu(2);
  lambda << Complex(0, 1), Complex(0, 2);
  mu << Complex(0, 3), Complex(0, 4);
  const Eigen::VectorXcd zeros = Eigen::VectorXcd::Zero(2);
  const loewner::TangentialDataset td(
      lambda, Eigen::MatrixXcd::Ones(1, 2), zeros.transpose(), mu,
      Eigen::MatrixXcd::Ones(2, 1), zeros, false);
  const LoewnerPencil flat = loewner::build_pencil(td, false);
  const PencilSVD svd = loewner::svd_pencil(flat);
  const FrequencyResponseDataset ds = testutil::siso_dataset(
      {Complex(0, 5), Complex(0, 6)}, [](Complex) { return Complex(1, 0); });

  const std::vector<SweepEntry> sweep =
      loewner::error_sweep(flat, svd, ds, {1, 2, 5});
  REQUIRE(sweep.size() == 3);
  CHECK(sweep[0].status == "SingularEt");
  CHECK(std::isnan(sweep[0].epsilon));
  CHECK(sweep[1].status == "SingularEt");
  CHECK(sweep[2].status == "ROutOfRange");
  CHECK(std::isnan(sweep[2].epsilon));

  CHECK_THROWS_AS(loewner::error_sweep(flat, svd, ds, {}),
                  loewner::ROutOfRange);
}

TEST_CASE("sweeps are reproducible") {
  const Fixture fix = make_fixture(3, 1, 1, 37);
  const std::vector<int> orders = {2, 4, 6};
  const auto a = loewner::error_sweep(fix.pencil, fix.svd, fix.held_out,
                                      orders);
  const auto b = loewner::error_sweep(fix.pencil, fix.svd, fix.held_out,
                                      orders);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].order == b[k].order);
    CHECK(a[k].epsilon == b[k].epsilon);
    CHECK(a[k].status == b[k].status);
  }
}

TEST_CASE("response tables carry every channel at every frequency") {
  testutil::TempDir dir;
  const Fixture fix = make_fixture(2, 3, 3, 38);
  const ReducedModel model = loewner::reduce(fix.pencil, fix.svd, fix.rank);
  loewner::write_response_table(fix.held_out, model, dir.file("resp.csv"));

  std::istringstream in(testutil::slurp(dir.file("resp.csv")));
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "omega,|H|,|G|,argH,argG");
  std::size_t rows = 0;
  double max_mag_diff = 0.0;
  while (std::getline(in, line)) {
    ++rows;
    std::istringstream fields(line);
    std::string field;
    std::vector<double> values;
    while (std::getline(fields, field, ',')) {
      values.push_back(std::stod(field));
    }
    REQUIRE(values.size() == 5);
    max_mag_diff = std::max(max_mag_diff, std::abs(values[1] - values[2]));
    CHECK(values[3] > -std::numbers::pi);
    CHECK(values[3] <= std::numbers::pi);
    CHECK(values[4] > -std::numbers::pi);
    CHECK(values[4] <= std::numbers::pi);
  }
  CHECK(rows == fix.held_out.size() * 9);
  CHECK(max_mag_diff <= 1e-8);
}

TEST_CASE("an empty dataset writes a header-only table") {
  testutil::TempDir dir;
  const Fixture fix = make_fixture(2, 1, 1, 39);
  const ReducedModel model = loewner::reduce(fix.pencil, fix.svd, fix.rank);
  const FrequencyResponseDataset empty({}, 1, 1);
  loewner::write_response_table(empty, model, dir.file("empty.csv"));
  CHECK(testutil::slurp(dir.file("empty.csv")) == "omega,|H|,|G|,argH,argG\n");
}

TEST_CASE("sweep CSV spells skipped epsilons as nan") {
  testutil::TempDir dir;
  const std::vector<SweepEntry> entries = {
      {2, 0.125, "ok"},
      {3, std::nan(""), "SingularEt"},
  };
  loewner::write_sweep_csv(entries, dir.file("sweep.csv"));
  CHECK(testutil::slurp(dir.file("sweep.csv")) ==
        "r,epsilon,status\n2,0.125,ok\n3,nan,SingularEt\n");
}

TEST_CASE("singular value CSV is one-based") {
  testutil::TempDir dir;
  Eigen::VectorXd sigma(3);
  sigma << 2.0, 1.0, 0.5;
  loewner::write_singular_values_csv(sigma, dir.file("sv.csv"));
  CHECK(testutil::slurp(dir.file("sv.csv")) ==
        "k,sigma\n1,2\n2,1\n3,0.5\n");
}

TEST_CASE("error report JSON mirrors the struct") {
  testutil::TempDir dir;
  ErrorReport report;
  report.epsilon = 0.5;
  report.order = 7;
  report.notes = {"unstable_poles=0"};
  report.per_frequency = {{1.0, 0.25}, {2.0, 0.75}};
  loewner::write_error_report_json(report, dir.file("report.json"));
  const std::string text = testutil::slurp(dir.file("report.json"));
  CHECK(text.find("\"order\":7") != std::string::npos);
  CHECK(text.find("\"epsilon\":0.5") != std::string::npos);
  CHECK(text.find("unstable_poles=0") != std::string::npos);
  CHECK(text.find("\"omega\":2.0") != std::string::npos);
}

}  // TEST_SUITE
