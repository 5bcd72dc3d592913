// Copyright (c) 2026 the loewner developers. See the top-level LICENSE file
// for details.
//
// SPDX-License-Identifier: Apache-2.0

#include "loewner/pencil.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "detail/json_io.hpp"
#include "loewner/errors.hpp"
#include "loewner/kernels.hpp"

namespace loewner {
namespace {

constexpr double kSingularRcond = 1e-14;

struct SylvesterData {
  Eigen::MatrixXcd M, Lambda, R, L;
};

SylvesterData sylvester_data(const TangentialDataset& td,
                             const RealifyTransform* transform) {
  SylvesterData d{td.M(), td.Lambda(), td.R(), td.L()};
  if (transform != nullptr) {
    d.M = transform->left() * d.M * transform->left().adjoint();
    d.Lambda = transform->right() * d.Lambda * transform->right().adjoint();
    d.R = d.R * transform->right().adjoint();
    d.L = transform->left() * d.L;
  }
  return d;
}

std::pair<double, double> residual_impl(const SylvesterData& d,
                                        const Eigen::MatrixXcd& Lw,
                                        const Eigen::MatrixXcd& Ls,
                                        const Eigen::MatrixXcd& V,
                                        const Eigen::MatrixXcd& W) {
  const Eigen::MatrixXcd VR = V * d.R;
  const Eigen::MatrixXcd LW = d.L * W;
  const Eigen::MatrixXcd rhs1 = VR - LW;
  const Eigen::MatrixXcd rhs2 = d.M * VR - LW * d.Lambda;
  const double res1 = (d.M * Lw - Lw * d.Lambda - rhs1).norm() /
                      std::max(1.0, rhs1.norm());
  const double res2 = (d.M * Ls - Ls * d.Lambda - rhs2).norm() /
                      std::max(1.0, rhs2.norm());
  return {res1, res2};
}

// Verifies the imaginary residue left by the congruence and zeroes it.
void enforce_real(Eigen::MatrixXcd& mat, const char* name) {
  const double imag_max =
      mat.size() == 0 ? 0.0 : mat.imag().cwiseAbs().maxCoeff();
  const double mat_max = mat.size() == 0 ? 0.0 : mat.cwiseAbs().maxCoeff();
  if (imag_max > kRealifyBound * mat_max) {
    throw RealifyResidueTooLarge(
        std::string(name) + " keeps imaginary residue " +
        detail::format_double(imag_max) + " against magnitude " +
        detail::format_double(mat_max));
  }
  mat.imag().setZero();
}

std::string complex_string(Complex s) {
  std::string out = detail::format_double(s.real());
  if (s.imag() != 0.0) {
    out += " + " + detail::format_double(s.imag()) + "i";
  }
  return out;
}

}  // namespace

LoewnerPencil build_pencil(const TangentialDataset& td, bool make_real) {
  Eigen::MatrixXcd Lw, Ls;
  kernels::assemble_loewner_omp(td.mu(), td.lambda(), td.L(), td.W(), td.V(),
                                td.R(), Lw, Ls);
  Eigen::MatrixXcd V = td.V();
  Eigen::MatrixXcd W = td.W();
  std::optional<RealifyTransform> transform;
  if (make_real) {
    transform = realify(td);
    const Eigen::MatrixXcd right_adj = transform->right().adjoint();
    Lw = transform->left() * Lw * right_adj;
    Ls = transform->left() * Ls * right_adj;
    V = transform->left() * V;
    W = W * right_adj;
    enforce_real(Lw, "Loewner matrix");
    enforce_real(Ls, "shifted Loewner matrix");
    enforce_real(V, "V");
    enforce_real(W, "W");
  }
  const SylvesterData d =
      sylvester_data(td, transform ? &*transform : nullptr);
  const auto [res1, res2] = residual_impl(d, Lw, Ls, V, W);
  if (res1 > kSylvesterBound || res2 > kSylvesterBound) {
    throw NumericalError("SylvesterCheckFailed",
                         "construction residuals " +
                             detail::format_double(res1) + ", " +
                             detail::format_double(res2) + " exceed " +
                             detail::format_double(kSylvesterBound));
  }
  return LoewnerPencil(std::move(Lw), std::move(Ls), std::move(V),
                       std::move(W), td, std::move(transform), make_real,
                       res1, res2);
}

std::pair<double, double> sylvester_residual(const LoewnerPencil& pencil) {
  const SylvesterData d = sylvester_data(
      pencil.source(),
      pencil.transform() ? &*pencil.transform() : nullptr);
  return residual_impl(d, pencil.Lw(), pencil.Ls(), pencil.V(), pencil.W());
}

PencilSVD svd_pencil(const LoewnerPencil& pencil,
                     std::optional<Complex> shift) {
  Complex x;
  if (shift.has_value()) {
    x = *shift;
    if (pencil.is_real() && x.imag() != 0.0) {
      throw InvalidRange("complex shift " + complex_string(x) +
                         " would destroy the real pencil; pass a real shift "
                         "or build without realification");
    }
  } else {
    const Complex lambda0 = pencil.source().lambda()(0);
    x = pencil.is_real() ? Complex(std::abs(lambda0), 0.0) : lambda0;
  }

  PencilSVD out;
  out.shift = x;
  out.is_real = pencil.is_real();
  if (pencil.is_real()) {
    const Eigen::MatrixXd mat =
        pencil.Ls().real() - x.real() * pencil.Lw().real();
    Eigen::BDCSVD<Eigen::MatrixXd> svd(
        mat, Eigen::ComputeFullU | Eigen::ComputeFullV);
    out.Y = svd.matrixU().cast<Complex>();
    out.X = svd.matrixV().cast<Complex>();
    out.sigma = svd.singularValues();
  } else {
    const Eigen::MatrixXcd mat = pencil.Ls() - x * pencil.Lw();
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(
        mat, Eigen::ComputeFullU | Eigen::ComputeFullV);
    out.Y = svd.matrixU();
    out.X = svd.matrixV();
    out.sigma = svd.singularValues();
  }
  return out;
}

int select_order(const PencilSVD& svd, const OrderPolicy& policy) {
  const int max_r = static_cast<int>(svd.sigma.size());
  if (std::holds_alternative<int>(policy)) {
    const int r = std::get<int>(policy);
    if (r < 1 || r > max_r) {
      throw ROutOfRange("explicit order " + std::to_string(r) +
                        " outside [1, " + std::to_string(max_r) + "]");
    }
    return r;
  }
  const double tol = std::get<double>(policy);
  if (!(tol > 0.0) || !(tol < 1.0)) {
    throw ROutOfRange("tolerance must lie in (0, 1), got " +
                      detail::format_double(tol));
  }
  if (max_r == 0 || svd.sigma(0) == 0.0) return 0;
  const double cut = tol * svd.sigma(0);
  int r = 0;
  while (r < max_r && svd.sigma(r) >= cut) ++r;
  return r;
}

ReducedModel::ReducedModel(Eigen::MatrixXcd E, Eigen::MatrixXcd A,
                           Eigen::MatrixXcd B, Eigen::MatrixXcd C,
                           Eigen::VectorXd sigma, bool is_real)
    : E_(std::move(E)),
      A_(std::move(A)),
      B_(std::move(B)),
      C_(std::move(C)),
      sigma_(std::move(sigma)),
      is_real_(is_real) {
  const Eigen::Index r = E_.rows();
  if (r < 1 || E_.cols() != r || A_.rows() != r || A_.cols() != r ||
      B_.rows() != r || B_.cols() < 1 || C_.cols() != r || C_.rows() < 1) {
    throw DimensionMismatch("reduced matrices have inconsistent shapes");
  }
  if (!E_.allFinite() || !A_.allFinite() || !B_.allFinite() ||
      !C_.allFinite()) {
    throw InvalidData("reduced matrices contain non-finite entries");
  }
  if (is_real_ && (E_.imag().cwiseAbs().maxCoeff() != 0.0 ||
                   A_.imag().cwiseAbs().maxCoeff() != 0.0 ||
                   B_.imag().cwiseAbs().maxCoeff() != 0.0 ||
                   C_.imag().cwiseAbs().maxCoeff() != 0.0)) {
    throw InvalidData("model flagged real but has imaginary entries");
  }
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(E_);
  const double rc = lu.rcond();
  if (!(rc > kSingularRcond)) {
    throw SingularEt("reduced E of order " + std::to_string(r) +
                     " is numerically singular (rcond " +
                     detail::format_double(rc) +
                     "); try r +/- 1 or another shift");
  }
  D_ = Eigen::MatrixXcd::Zero(C_.rows(), B_.cols());
}

ReducedModel reduce(const LoewnerPencil& pencil, const PencilSVD& svd,
                    int r) {
  const Eigen::Index nu = pencil.nu();
  const Eigen::Index rho = pencil.rho();
  if (svd.Y.rows() != nu || svd.X.rows() != rho) {
    throw DimensionMismatch("SVD factors do not match the pencil shape");
  }
  const int max_r = static_cast<int>(std::min(nu, rho));
  if (r < 1 || r > max_r) {
    throw ROutOfRange("order " + std::to_string(r) + " outside [1, " +
                      std::to_string(max_r) + "]");
  }

  if (pencil.is_real() && svd.is_real) {
    const Eigen::MatrixXd Yr = svd.Y.leftCols(r).real();
    const Eigen::MatrixXd Xr = svd.X.leftCols(r).real();
    const Eigen::MatrixXd Et = -(Yr.transpose() * pencil.Lw().real() * Xr);
    const Eigen::MatrixXd At = -(Yr.transpose() * pencil.Ls().real() * Xr);
    const Eigen::MatrixXd Bt = Yr.transpose() * pencil.V().real();
    const Eigen::MatrixXd Ct = pencil.W().real() * Xr;
    return ReducedModel(Et.cast<Complex>(), At.cast<Complex>(),
                        Bt.cast<Complex>(), Ct.cast<Complex>(), svd.sigma,
                        true);
  }
  const Eigen::MatrixXcd Yr = svd.Y.leftCols(r);
  const Eigen::MatrixXcd Xr = svd.X.leftCols(r);
  return ReducedModel(-(Yr.adjoint() * pencil.Lw() * Xr),
                      -(Yr.adjoint() * pencil.Ls() * Xr),
                      Yr.adjoint() * pencil.V(), pencil.W() * Xr, svd.sigma,
                      false);
}

Eigen::MatrixXcd eval_transfer(const ReducedModel& model, Complex s) {
  const std::vector<Complex> pts{s};
  return kernels::sample_transfer_serial(model.E(), model.A(), model.B(),
                                         model.C(), model.D(), pts)[0];
}

std::vector<Complex> poles(const ReducedModel& model) {
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(model.E());
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(lu.solve(model.A()),
                                                     false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("EigSolverFailed",
                         "eigensolver did not converge on the reduced pencil");
  }
  std::vector<Complex> vals(static_cast<std::size_t>(model.order()));
  for (Eigen::Index i = 0; i < model.order(); ++i) {
    vals[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  }
  std::sort(vals.begin(), vals.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return vals;
}

ReducedModel load_model(const std::filesystem::path& path) {
  const detail::Json doc = detail::load_json_file(path);
  if (!doc.is_object()) {
    throw SchemaMismatch("model file must hold a JSON object");
  }
  const Eigen::Index n = detail::index_field(doc, "n");
  const Eigen::Index m = detail::index_field(doc, "m");
  const Eigen::Index p = detail::index_field(doc, "p");
  for (const char* key : {"E", "A", "B", "C", "D"}) {
    if (!doc.contains(key)) {
      throw SchemaMismatch(std::string("missing '") + key + "' matrix");
    }
  }
  const bool complex_form = doc.contains("E_im") || doc.contains("A_im") ||
                            doc.contains("B_im") || doc.contains("C_im");
  if (complex_form) {
    for (const char* key : {"E_im", "A_im", "B_im", "C_im"}) {
      if (!doc.contains(key)) {
        throw SchemaMismatch(std::string("complex model misses '") + key +
                             "'");
      }
    }
  }
  const Eigen::MatrixXd D = detail::matrix_from_json(doc["D"], p, m, "D");
  if (D.cwiseAbs().maxCoeff() != 0.0) {
    throw SchemaMismatch("reduced models fix D = 0; found nonzero entries");
  }
  auto read = [&](const char* re_key, const char* im_key, Eigen::Index rows,
                  Eigen::Index cols) {
    Eigen::MatrixXcd out(rows, cols);
    out.real() = detail::matrix_from_json(doc[re_key], rows, cols, re_key);
    if (complex_form) {
      out.imag() = detail::matrix_from_json(doc[im_key], rows, cols, im_key);
    } else {
      out.imag().setZero();
    }
    return out;
  };
  return ReducedModel(read("E", "E_im", n, n), read("A", "A_im", n, n),
                      read("B", "B_im", n, m), read("C", "C_im", p, n),
                      Eigen::VectorXd(), !complex_form);
}

void save_model(const ReducedModel& model, const std::filesystem::path& path) {
  detail::Json doc;
  doc["n"] = model.order();
  doc["m"] = model.inputs();
  doc["p"] = model.outputs();
  doc["E"] = detail::matrix_to_json(model.E().real());
  doc["A"] = detail::matrix_to_json(model.A().real());
  doc["B"] = detail::matrix_to_json(model.B().real());
  doc["C"] = detail::matrix_to_json(model.C().real());
  doc["D"] = detail::matrix_to_json(model.D().real());
  if (!model.is_real()) {
    doc["E_im"] = detail::matrix_to_json(model.E().imag());
    doc["A_im"] = detail::matrix_to_json(model.A().imag());
    doc["B_im"] = detail::matrix_to_json(model.B().imag());
    doc["C_im"] = detail::matrix_to_json(model.C().imag());
  }
  detail::save_json_file(doc, path);
}

}  // namespace loewner
