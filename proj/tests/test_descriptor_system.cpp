// Copyright (c) 2026 the loewner developers. See the top-level LICENSE file
// for details.
//
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>

#include "doctest.h"
#include "test_utils.hpp"

using loewner::Complex;
using loewner::DescriptorSystem;

TEST_SUITE("lti-core") {

TEST_CASE("transfer of 1/(s+1) at real points") {
  const DescriptorSystem sys = testutil::first_order_lag();
  CHECK(std::abs(loewner::eval_transfer(sys, Complex(1.0, 0.0))(0, 0) -
                 Complex(0.5, 0.0)) <= 1e-15);
  CHECK(std::abs(loewner::eval_transfer(sys, Complex(0.0, 0.0))(0, 0) -
                 Complex(1.0, 0.0)) <= 1e-15);
}

TEST_CASE("transfer of the integrator pair I/s") {
  const Eigen::MatrixXd I2 = Eigen::MatrixXd::Identity(2, 2);
  const DescriptorSystem sys(I2, Eigen::MatrixXd::Zero(2, 2), I2, I2);
  const Eigen::MatrixXcd H = loewner::eval_transfer(sys, Complex(2.0, 0.0));
  CHECK((H - 0.5 * Eigen::MatrixXcd::Identity(2, 2)).norm() <= 1e-15);
}

TEST_CASE("synthetic benchmark shape across the band") {
  const DescriptorSystem sys =
      loewner::generate_modal_system(135, 0.1, 100.0, 0.05, 0.4, 3, 3, 1);
  CHECK(sys.order() == 270);
  CHECK(sys.inputs() == 3);
  CHECK(sys.outputs() == 3);
  for (double omega : {0.1, 3.7, 100.0}) {
    const Eigen::MatrixXcd H =
        loewner::eval_transfer(sys, Complex(0.0, omega));
    CHECK(H.rows() == 3);
    CHECK(H.cols() == 3);
    CHECK(H.allFinite());
  }
}

TEST_CASE("transfer evaluation at a pole reports SingularPencil") {
  const DescriptorSystem sys = testutil::first_order_lag();
  CHECK_THROWS_AS(loewner::eval_transfer(sys, Complex(-1.0, 0.0)),
                  loewner::SingularPencil);
}

TEST_CASE("single-mode generator matches the hand-built block") {
  const DescriptorSystem sys =
      loewner::generate_modal_system(1, 1.0, 1.0, 0.5, 0.5, 1, 1, 9);
  Eigen::MatrixXd expected(2, 2);
  expected << 0.0, 1.0, -1.0, -1.0;
  CHECK((sys.A() - expected).norm() == 0.0);
  CHECK((sys.E() - Eigen::MatrixXd::Identity(2, 2)).norm() == 0.0);

  const std::vector<Complex> p = loewner::poles(sys);
  const double half_sqrt3 = std::sqrt(3.0) / 2.0;
  CHECK(std::abs(p[0] - Complex(-0.5, -half_sqrt3)) <= 1e-12);
  CHECK(std::abs(p[1] - Complex(-0.5, half_sqrt3)) <= 1e-12);
}

TEST_CASE("equal seeds give bit-identical systems") {
  const DescriptorSystem a =
      loewner::generate_modal_system(7, 0.2, 50.0, 0.01, 0.3, 2, 3, 1234);
  const DescriptorSystem b =
      loewner::generate_modal_system(7, 0.2, 50.0, 0.01, 0.3, 2, 3, 1234);
  CHECK((a.A().array() == b.A().array()).all());
  CHECK((a.B().array() == b.B().array()).all());
  CHECK((a.C().array() == b.C().array()).all());
  const DescriptorSystem c =
      loewner::generate_modal_system(7, 0.2, 50.0, 0.01, 0.3, 2, 3, 1235);
  CHECK(!(a.B().array() == c.B().array()).all());
}

TEST_CASE("generator rejects bad ranges") {
  CHECK_THROWS_AS(loewner::generate_modal_system(0, 1, 2, 0.1, 0.2, 1, 1, 1),
                  loewner::InvalidRange);
  CHECK_THROWS_AS(loewner::generate_modal_system(2, -1, 2, 0.1, 0.2, 1, 1, 1),
                  loewner::InvalidRange);
  CHECK_THROWS_AS(loewner::generate_modal_system(2, 3, 2, 0.1, 0.2, 1, 1, 1),
                  loewner::InvalidRange);
  CHECK_THROWS_AS(loewner::generate_modal_system(2, 1, 2, 0.0, 0.2, 1, 1, 1),
                  loewner::InvalidRange);
  CHECK_THROWS_AS(loewner::generate_modal_system(2, 1, 2, 0.1, 1.0, 1, 1, 1),
                  loewner::InvalidRange);
  CHECK_THROWS_AS(loewner::generate_modal_system(2, 1, 2, 0.1, 0.2, 0, 1, 1),
                  loewner::InvalidRange);
}

TEST_CASE("generated systems are stable") {
  for (std::uint64_t seed : {1ull, 77ull, 4096ull}) {
    const DescriptorSystem sys =
        loewner::generate_modal_system(11, 0.1, 100.0, 0.001, 0.9, 2, 2, seed);
    for (Complex pole : loewner::poles(sys)) {
      CHECK(pole.real() < 0.0);
    }
  }
}

TEST_CASE("scalar pole") {
  const std::vector<Complex> p = loewner::poles(testutil::first_order_lag());
  REQUIRE(p.size() == 1);
  CHECK(std::abs(p[0] - Complex(-1.0, 0.0)) <= 1e-15);
}

TEST_CASE("conjugate symmetry of real-system transfer") {
  const DescriptorSystem sys =
      loewner::generate_modal_system(5, 0.5, 20.0, 0.05, 0.5, 2, 2, 31);
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  for (int t = 0; t < 25; ++t) {
    const Complex s(std::abs(coord(gen)) + 0.5, coord(gen));
    const Eigen::MatrixXcd H = loewner::eval_transfer(sys, s);
    const Eigen::MatrixXcd Hc =
        loewner::eval_transfer(sys, std::conj(s));
    CHECK(testutil::rel_diff(Hc, H.conjugate()) <= 1e-12);
  }
}

TEST_CASE("analytic accuracy of 1/(s+1)") {
  const DescriptorSystem sys = testutil::first_order_lag();
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  int tested = 0;
  while (tested < 100) {
    const Complex s(coord(gen), coord(gen));
    if (std::abs(s + Complex(1.0, 0.0)) <= 0.1) continue;
    ++tested;
    const Complex expected = 1.0 / (s + Complex(1.0, 0.0));
    CHECK(std::abs(loewner::eval_transfer(sys, s)(0, 0) - expected) /
              std::abs(expected) <=
          1e-13);
  }
}

TEST_CASE("construction rejects invalid systems") {
  const Eigen::MatrixXd I2 = Eigen::MatrixXd::Identity(2, 2);
  CHECK_THROWS_AS(DescriptorSystem(Eigen::MatrixXd::Zero(2, 2), I2, I2, I2),
                  loewner::InvalidSystem);
  CHECK_THROWS_AS(DescriptorSystem(I2, Eigen::MatrixXd::Identity(3, 3), I2,
                                   I2),
                  loewner::InvalidSystem);
  CHECK_THROWS_AS(DescriptorSystem(I2, I2, Eigen::MatrixXd(2, 0), I2),
                  loewner::InvalidSystem);
  Eigen::MatrixXd bad = I2;
  bad(0, 1) = std::nan("");
  CHECK_THROWS_AS(DescriptorSystem(I2, bad, I2, I2), loewner::InvalidSystem);
  CHECK_THROWS_AS(DescriptorSystem(I2, I2, I2, I2,
                                   Eigen::MatrixXd::Zero(1, 2)),
                  loewner::InvalidSystem);
}

TEST_CASE("default D is zero") {
  const DescriptorSystem sys =
      loewner::generate_modal_system(3, 1.0, 10.0, 0.1, 0.2, 2, 2, 2);
  CHECK(sys.D().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("JSON round-trip is exact") {
  testutil::TempDir dir;
  const DescriptorSystem sys =
      loewner::generate_modal_system(4, 0.3, 30.0, 0.02, 0.6, 2, 3, 99);
  loewner::save_system(sys, dir.file("sys.json"));
  const DescriptorSystem back = loewner::load_system(dir.file("sys.json"));
  CHECK((back.E().array() == sys.E().array()).all());
  CHECK((back.A().array() == sys.A().array()).all());
  CHECK((back.B().array() == sys.B().array()).all());
  CHECK((back.C().array() == sys.C().array()).all());
  CHECK((back.D().array() == sys.D().array()).all());
}

TEST_CASE("system loader reports schema problems") {
  testutil::TempDir dir;
  testutil::spit(dir.file("bad.json"), "{\"n\": 1, \"m\": 1}");
  CHECK_THROWS_AS(loewner::load_system(dir.file("bad.json")),
                  loewner::SchemaMismatch);
  testutil::spit(dir.file("broken.json"), "{not json");
  CHECK_THROWS_AS(loewner::load_system(dir.file("broken.json")),
                  loewner::ParseError);
  CHECK_THROWS_AS(loewner::load_system(dir.file("absent.json")),
                  loewner::ParseError);
}

TEST_CASE("pole computation is guarded above order 2000") {
  const Eigen::Index n = 2001;
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  const DescriptorSystem sys(I, -I, Eigen::MatrixXd::Ones(n, 1),
                             Eigen::MatrixXd::Ones(1, n));
  CHECK_THROWS_AS(loewner::poles(sys), loewner::DimensionTooLarge);
}

}  // TEST_SUITE
