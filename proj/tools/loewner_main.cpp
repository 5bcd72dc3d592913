// Copyright (c) 2026 the loewner developers. See the top-level LICENSE file
// for details.
//
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "detail/text_format.hpp"
#include "loewner/loewner.hpp"

namespace {

using loewner::Complex;
namespace detail = loewner::detail;

struct Range {
  double lo;
  double hi;
};

Range parse_range(const std::string& text, const char* flag) {
  const auto fields = detail::split_fields(text, ':');
  if (fields.size() != 2) {
    throw loewner::InvalidRange(std::string(flag) + " expects LO:HI, got '" +
                                text + "'");
  }
  return {detail::parse_double_strict(fields[0], flag),
          detail::parse_double_strict(fields[1], flag)};
}

std::vector<double> log_grid(Range r, int count) {
  if (count < 1) {
    throw loewner::InvalidRange("--freqs must be at least 1");
  }
  if (!(r.lo > 0.0) || !(r.hi >= r.lo)) {
    throw loewner::InvalidRange(
        "--omega needs 0 < LO <= HI for a log-spaced grid");
  }
  std::vector<double> grid(static_cast<std::size_t>(count));
  const double llo = std::log10(r.lo);
  const double lhi = std::log10(r.hi);
  for (int k = 0; k < count; ++k) {
    grid[static_cast<std::size_t>(k)] =
        count == 1 ? r.lo : std::pow(10.0, llo + k * (lhi - llo) / (count - 1));
  }
  return grid;
}

Complex parse_shift(const std::string& text) {
  const auto fields = detail::split_fields(text, ',');
  if (fields.size() == 1) {
    return Complex(detail::parse_double_strict(fields[0], "--shift"), 0.0);
  }
  if (fields.size() == 2) {
    return Complex(detail::parse_double_strict(fields[0], "--shift"),
                   detail::parse_double_strict(fields[1], "--shift"));
  }
  throw loewner::InvalidRange("--shift expects RE or RE,IM, got '" + text +
                              "'");
}

std::vector<int> parse_orders(const std::string& text) {
  std::vector<int> orders;
  if (text.find(':') != std::string::npos) {
    const auto fields = detail::split_fields(text, ':');
    if (fields.size() != 2 && fields.size() != 3) {
      throw loewner::InvalidRange("--orders expects LO:HI[:STEP], got '" +
                                  text + "'");
    }
    const long long lo = detail::parse_int_strict(fields[0], "--orders");
    const long long hi = detail::parse_int_strict(fields[1], "--orders");
    const long long step =
        fields.size() == 3 ? detail::parse_int_strict(fields[2], "--orders")
                           : 1;
    if (step < 1 || lo > hi) {
      throw loewner::InvalidRange("--orders needs LO <= HI and STEP >= 1");
    }
    for (long long v = lo; v <= hi; v += step) {
      orders.push_back(static_cast<int>(v));
    }
  } else {
    for (std::string_view field : detail::split_fields(text, ',')) {
      orders.push_back(
          static_cast<int>(detail::parse_int_strict(field, "--orders")));
    }
  }
  for (int r : orders) {
    if (r < 1) {
      throw loewner::InvalidRange("orders must be >= 1, got " +
                                  std::to_string(r));
    }
  }
  return orders;
}

std::pair<Eigen::Index, Eigen::Index> parse_node(const std::string& text) {
  const auto fields = detail::split_fields(text, ',');
  if (fields.size() != 2) {
    throw loewner::InvalidRange("--node expects OUT,IN, got '" + text + "'");
  }
  return {static_cast<Eigen::Index>(
              detail::parse_int_strict(fields[0], "--node")),
          static_cast<Eigen::Index>(
              detail::parse_int_strict(fields[1], "--node"))};
}

std::uint64_t resolve_seed(bool flag_given, std::uint64_t flag_value) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("LOEWNER_SEED")) {
    const long long v = detail::parse_int_strict(env, "LOEWNER_SEED");
    if (v < 0) {
      throw loewner::InvalidRange("LOEWNER_SEED must be nonnegative");
    }
    return static_cast<std::uint64_t>(v);
  }
  return 1;
}

loewner::PartitionScheme scheme_from(const std::string& name) {
  return name == "half" ? loewner::PartitionScheme::kHalfSplit
                        : loewner::PartitionScheme::kInterleave;
}

struct PipelineFlags {
  std::string data;
  std::string partition = "interleave";
  bool real = true;
  std::string shift;
};

void add_pipeline_flags(CLI::App* sub, PipelineFlags& flags) {
  sub->add_option("--data", flags.data, "Input dataset (.csv or .json)")
      ->required();
  sub->add_option("--partition", flags.partition,
                  "Sample split between right and left data")
      ->check(CLI::IsMember({"interleave", "half"}))
      ->capture_default_str();
  sub->add_flag("--real,!--no-real", flags.real,
                "Conjugate-close the data and build a real pencil");
  sub->add_option("--shift", flags.shift,
                  "SVD shift x as RE or RE,IM (default: first right point)");
}

struct Pipeline {
  loewner::FrequencyResponseDataset ds;
  loewner::LoewnerPencil pencil;
  loewner::PencilSVD svd;
};

Pipeline run_pipeline(const PipelineFlags& flags) {
  loewner::FrequencyResponseDataset ds = loewner::read_dataset(flags.data);
  loewner::TangentialDataset td =
      loewner::partition(ds, scheme_from(flags.partition));
  if (flags.real) td = loewner::conjugate_close(td);
  loewner::LoewnerPencil pencil = loewner::build_pencil(td, flags.real);
  std::optional<Complex> shift;
  if (!flags.shift.empty()) shift = parse_shift(flags.shift);
  loewner::PencilSVD svd = loewner::svd_pencil(pencil, shift);
  return {std::move(ds), std::move(pencil), std::move(svd)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Loewner-framework model order reduction toolkit"};
  app.require_subcommand(1);

  CLI::App* gen = app.add_subcommand(
      "generate", "Generate a synthetic structural benchmark system");
  int gen_modes = 135, gen_inputs = 3, gen_outputs = 3;
  std::uint64_t gen_seed = 1;
  std::string gen_omega = "0.1:100", gen_damping = "0.05:0.4", gen_out;
  gen->add_option("--modes", gen_modes, "Second-order modes (n = 2*modes)")
      ->capture_default_str();
  gen->add_option("--inputs", gen_inputs, "Input count m")
      ->capture_default_str();
  gen->add_option("--outputs", gen_outputs, "Output count p")
      ->capture_default_str();
  CLI::Option* gen_seed_opt = gen->add_option(
      "--seed", gen_seed, "RNG seed (falls back to env LOEWNER_SEED, then 1)");
  gen->add_option("--omega", gen_omega, "Modal frequency range LO:HI (rad/s)")
      ->capture_default_str();
  gen->add_option("--damping", gen_damping, "Damping ratio range LO:HI")
      ->capture_default_str();
  gen->add_option("-o,--output", gen_out, "System JSON path")->required();
  gen->callback([&] {
    const Range w = parse_range(gen_omega, "--omega");
    const Range z = parse_range(gen_damping, "--damping");
    const loewner::DescriptorSystem sys = loewner::generate_modal_system(
        gen_modes, w.lo, w.hi, z.lo, z.hi, gen_inputs, gen_outputs,
        resolve_seed(gen_seed_opt->count() > 0, gen_seed));
    loewner::save_system(sys, gen_out);
    std::cout << "n = " << sys.order() << ", m = " << sys.inputs()
              << ", p = " << sys.outputs() << "\n";
  });

  CLI::App* sample = app.add_subcommand(
      "sample", "Sample a system's frequency response on a log grid");
  std::string sample_system, sample_omega = "0.1:100", sample_node, sample_out;
  int sample_freqs = 400;
  sample->add_option("--system", sample_system, "System JSON path")
      ->required();
  sample->add_option("--freqs", sample_freqs, "Number of grid points")
      ->capture_default_str();
  sample->add_option("--omega", sample_omega, "Frequency range LO:HI (rad/s)")
      ->capture_default_str();
  sample->add_option("--node", sample_node,
                     "Keep only channel OUT,IN (SISO extraction)");
  sample->add_option("-o,--output", sample_out, "Dataset path (.csv or .json)")
      ->required();
  sample->callback([&] {
    const loewner::DescriptorSystem sys = loewner::load_system(sample_system);
    loewner::FrequencyResponseDataset ds = loewner::sample_frequency_response(
        sys, log_grid(parse_range(sample_omega, "--omega"), sample_freqs));
    if (!sample_node.empty()) {
      const auto [out_idx, in_idx] = parse_node(sample_node);
      ds = loewner::extract_node(ds, out_idx, in_idx);
    }
    loewner::write_dataset(ds, sample_out);
    std::cout << "samples = " << ds.size() << "\n";
  });

  CLI::App* reduce = app.add_subcommand(
      "reduce", "Build the Loewner pencil and emit a reduced model");
  PipelineFlags reduce_flags;
  add_pipeline_flags(reduce, reduce_flags);
  int reduce_r = 0;
  double reduce_tol = loewner::kDefaultRankTol;
  std::string reduce_out, reduce_sv;
  CLI::Option* r_opt =
      reduce->add_option("--r", reduce_r, "Explicit reduced order");
  CLI::Option* tol_opt = reduce->add_option(
      "--tol", reduce_tol, "Rank tolerance in (0, 1) (default 1e-12)");
  r_opt->excludes(tol_opt);
  tol_opt->excludes(r_opt);
  reduce->add_option("-o,--output", reduce_out, "Model JSON path")->required();
  reduce->add_option("--sv", reduce_sv, "Also write singular values CSV here");
  reduce->callback([&] {
    const Pipeline pipe = run_pipeline(reduce_flags);
    const loewner::OrderPolicy policy =
        r_opt->count() > 0 ? loewner::OrderPolicy(reduce_r)
                           : loewner::OrderPolicy(reduce_tol);
    int r = loewner::select_order(pipe.svd, policy);
    std::optional<loewner::ReducedModel> model;
    try {
      model = loewner::reduce(pipe.pencil, pipe.svd, r);
    } catch (const loewner::SingularEt& e) {
      const int max_r =
          static_cast<int>(std::min(pipe.pencil.nu(), pipe.pencil.rho()));
      if (r + 1 > max_r) throw;
      std::cerr << "note: " << e.what() << "; retrying with r = " << r + 1
                << "\n";
      r += 1;
      model = loewner::reduce(pipe.pencil, pipe.svd, r);
    }
    loewner::save_model(*model, reduce_out);
    if (!reduce_sv.empty()) {
      loewner::write_singular_values_csv(pipe.svd.sigma, reduce_sv);
    }
    std::cout << "order = " << r << "\n";
  });

  CLI::App* sweep =
      app.add_subcommand("sweep", "Error-vs-order sweep over one pencil");
  PipelineFlags sweep_flags;
  add_pipeline_flags(sweep, sweep_flags);
  std::string sweep_orders, sweep_out;
  sweep->add_option("--orders", sweep_orders,
                    "Orders to try: LO:HI[:STEP] or comma list")
      ->required();
  sweep->add_option("-o,--output", sweep_out, "Sweep CSV path")->required();
  sweep->callback([&] {
    const Pipeline pipe = run_pipeline(sweep_flags);
    const std::vector<loewner::SweepEntry> entries = loewner::error_sweep(
        pipe.pencil, pipe.svd, pipe.ds, parse_orders(sweep_orders));
    loewner::write_sweep_csv(entries, sweep_out);
    std::size_t skipped = 0;
    for (const loewner::SweepEntry& entry : entries) {
      if (entry.status != "ok") ++skipped;
    }
    std::cout << "orders = " << entries.size() << ", skipped = " << skipped
              << "\n";
  });

  CLI::App* report = app.add_subcommand(
      "report", "Compare a dataset against a reduced model");
  std::string report_data, report_model, report_out, report_json;
  report->add_option("--data", report_data, "Dataset path (.csv or .json)")
      ->required();
  report->add_option("--model", report_model, "Model JSON path")->required();
  report->add_option("-o,--output", report_out, "Response table CSV path")
      ->required();
  report->add_option("--json", report_json, "Also write a JSON error report");
  report->callback([&] {
    const loewner::FrequencyResponseDataset ds =
        loewner::read_dataset(report_data);
    const loewner::ReducedModel model = loewner::load_model(report_model);
    const loewner::ErrorReport rep = loewner::relative_error(ds, model);
    loewner::write_response_table(ds, model, report_out);
    if (!report_json.empty()) {
      loewner::write_error_report_json(rep, report_json);
    }
    std::cout << "epsilon = " << detail::format_double(rep.epsilon) << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const loewner::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const loewner::NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
