// Copyright (c) 2026 the loewner developers. See the top-level LICENSE file
// for details.
//
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "loewner/descriptor_system.hpp"
#include "loewner/kernels.hpp"

namespace {

using loewner::Complex;

// 1/4 of a SISO sweep of an order-n system, already split into left/right
// interpolation data of size half each.
struct AssemblyData {
  Eigen::VectorXcd mu, lambda;
  Eigen::MatrixXcd L, W, V, R;
};

AssemblyData make_assembly_data(Eigen::Index half, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unit(0.1, 100.0);
  AssemblyData d;
  d.lambda.resize(half);
  d.mu.resize(half);
  for (Eigen::Index k = 0; k < half; ++k) {
    d.lambda(k) = Complex(0.0, unit(gen));
    d.mu(k) = Complex(0.0, unit(gen) + 100.0);
  }
  d.R = Eigen::MatrixXcd::Ones(1, half);
  d.L = Eigen::MatrixXcd::Ones(half, 1);
  d.W.resize(1, half);
  d.V.resize(half, 1);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  for (Eigen::Index k = 0; k < half; ++k) {
    d.W(0, k) = Complex(val(gen), val(gen));
    d.V(k, 0) = Complex(val(gen), val(gen));
  }
  return d;
}

void BM_assemble_serial(benchmark::State& state) {
  const AssemblyData d = make_assembly_data(state.range(0), 7);
  Eigen::MatrixXcd Lw, Ls;
  for (auto _ : state) {
    loewner::kernels::assemble_loewner_serial(d.mu, d.lambda, d.L, d.W, d.V,
                                              d.R, Lw, Ls);
    benchmark::DoNotOptimize(Lw.data());
  }
}

void BM_assemble_omp(benchmark::State& state) {
  const AssemblyData d = make_assembly_data(state.range(0), 7);
  Eigen::MatrixXcd Lw, Ls;
  for (auto _ : state) {
    loewner::kernels::assemble_loewner_omp(d.mu, d.lambda, d.L, d.W, d.V, d.R,
                                           Lw, Ls);
    benchmark::DoNotOptimize(Lw.data());
  }
}

void BM_sample_serial(benchmark::State& state) {
  const loewner::DescriptorSystem sys =
      loewner::generate_modal_system(135, 0.1, 100.0, 0.05, 0.4, 3, 3, 1);
  std::vector<Complex> points(static_cast<std::size_t>(state.range(0)));
  for (std::size_t k = 0; k < points.size(); ++k) {
    points[k] = Complex(0.0, 0.1 + static_cast<double>(k));
  }
  const Eigen::MatrixXcd E = sys.E().cast<Complex>();
  const Eigen::MatrixXcd A = sys.A().cast<Complex>();
  const Eigen::MatrixXcd B = sys.B().cast<Complex>();
  const Eigen::MatrixXcd C = sys.C().cast<Complex>();
  const Eigen::MatrixXcd D = sys.D().cast<Complex>();
  for (auto _ : state) {
    auto values = loewner::kernels::sample_transfer_serial(E, A, B, C, D,
                                                           points);
    benchmark::DoNotOptimize(values.data());
  }
}

void BM_sample_omp(benchmark::State& state) {
  const loewner::DescriptorSystem sys =
      loewner::generate_modal_system(135, 0.1, 100.0, 0.05, 0.4, 3, 3, 1);
  std::vector<Complex> points(static_cast<std::size_t>(state.range(0)));
  for (std::size_t k = 0; k < points.size(); ++k) {
    points[k] = Complex(0.0, 0.1 + static_cast<double>(k));
  }
  const Eigen::MatrixXcd E = sys.E().cast<Complex>();
  const Eigen::MatrixXcd A = sys.A().cast<Complex>();
  const Eigen::MatrixXcd B = sys.B().cast<Complex>();
  const Eigen::MatrixXcd C = sys.C().cast<Complex>();
  const Eigen::MatrixXcd D = sys.D().cast<Complex>();
  for (auto _ : state) {
    auto values =
        loewner::kernels::sample_transfer_omp(E, A, B, C, D, points);
    benchmark::DoNotOptimize(values.data());
  }
}

}  // namespace

BENCHMARK(BM_assemble_serial)->Arg(100)->Arg(200)->Arg(400)->Arg(800);
BENCHMARK(BM_assemble_omp)->Arg(100)->Arg(200)->Arg(400)->Arg(800);
BENCHMARK(BM_sample_serial)->Arg(32)->Arg(128);
BENCHMARK(BM_sample_omp)->Arg(32)->Arg(128);

BENCHMARK_MAIN();
