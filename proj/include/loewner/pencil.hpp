// Copyright (c) 2026 the loewner developers. See the top-level LICENSE file
// for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef LOEWNER_PENCIL_HPP
#define LOEWNER_PENCIL_HPP

#include <Eigen/Dense>
#include <filesystem>
#include <optional>
#include <utility>
#include <variant>

#include "loewner/partition.hpp"

namespace loewner {

/// Relative tolerance bounds checked on every constructed pencil.
inline constexpr double kSylvesterBound = 1e-10;
inline constexpr double kRealifyBound = 1e-10;

/// Default numerical-rank tolerance for order selection.
inline constexpr double kDefaultRankTol = 1e-12;

/// Loewner matrix Lw (nu x rho), shifted Loewner matrix Ls, and the packed
/// value matrices V (nu x m), W (p x rho). When is_real, the realification
/// congruence has been applied and all imaginary parts (verified tiny) have
/// been dropped, so every entry is real. Construction always verifies the
/// two Sylvester identities; the residuals are kept for inspection.
class LoewnerPencil {
 public:
  const Eigen::MatrixXcd& Lw() const { return Lw_; }
  const Eigen::MatrixXcd& Ls() const { return Ls_; }
  const Eigen::MatrixXcd& V() const { return V_; }
  const Eigen::MatrixXcd& W() const { return W_; }
  bool is_real() const { return is_real_; }
  const TangentialDataset& source() const { return source_; }
  const std::optional<RealifyTransform>& transform() const {
    return transform_;
  }

  Eigen::Index nu() const { return Lw_.rows(); }
  Eigen::Index rho() const { return Lw_.cols(); }

  /// Residuals recorded at construction time.
  double residual1() const { return res1_; }
  double residual2() const { return res2_; }

 private:
  LoewnerPencil(Eigen::MatrixXcd Lw, Eigen::MatrixXcd Ls, Eigen::MatrixXcd V,
                Eigen::MatrixXcd W, TangentialDataset source,
                std::optional<RealifyTransform> transform, bool is_real,
                double res1, double res2)
      : Lw_(std::move(Lw)),
        Ls_(std::move(Ls)),
        V_(std::move(V)),
        W_(std::move(W)),
        source_(std::move(source)),
        transform_(std::move(transform)),
        is_real_(is_real),
        res1_(res1),
        res2_(res2) {}

  friend LoewnerPencil build_pencil(const TangentialDataset& td,
                                    bool make_real);

  Eigen::MatrixXcd Lw_, Ls_, V_, W_;
  TangentialDataset source_;
  std::optional<RealifyTransform> transform_;
  bool is_real_;
  double res1_, res2_;
};

/// Assembles
///   Lw[j,i] = (v_j r_i - l_j w_i) / (mu_j - lambda_i)
///   Ls[j,i] = (mu_j v_j r_i - lambda_i l_j w_i) / (mu_j - lambda_i)
/// and, when make_real, applies the realify congruence
///   Lw -> J_L Lw J_R*, Ls -> J_L Ls J_R*, V -> J_L V, W -> W J_R*
/// then drops the (verified tiny) imaginary parts. The per-matrix imaginary
/// residue must stay below kRealifyBound relative to the largest entry
/// magnitude, else RealifyResidueTooLarge.
LoewnerPencil build_pencil(const TangentialDataset& td, bool make_real);

/// res1 = |M Lw - Lw Lambda - (V R - L W)|_F   / max(1, |V R - L W|_F)
/// res2 = |M Ls - Ls Lambda - (M V R - L W Lambda)|_F
///                                     / max(1, |M V R - L W Lambda|_F)
/// For real pencils the same congruence is applied to M, Lambda, R, L first,
/// so the identities are checked in the transformed basis.
std::pair<double, double> sylvester_residual(const LoewnerPencil& pencil);

/// Full SVD of (Ls - x Lw). For real pencils with real x the factors are
/// real (stored with zero imaginary parts).
struct PencilSVD {
  Eigen::MatrixXcd Y;     // nu x nu left singular vectors
  Eigen::MatrixXcd X;     // rho x rho right singular vectors
  Eigen::VectorXd sigma;  // min(nu, rho) singular values, descending
  Complex shift;          // the x used
  bool is_real;
};

/// Auto shift (no x given) picks the first right interpolation point; for
/// real pencils its magnitude |lambda_0| is used instead, keeping the
/// factors real. An explicit complex x on a real pencil is rejected
/// (InvalidRange).
PencilSVD svd_pencil(const LoewnerPencil& pencil,
                     std::optional<Complex> shift = std::nullopt);

/// Either an explicit order r or a relative tolerance in (0, 1).
using OrderPolicy = std::variant<int, double>;

/// Explicit policy returns r after bounds checks. Tolerance policy returns
/// the count of sigma_k >= tol * sigma_1 (0 when sigma_1 = 0, meaning the
/// data carries no signal).
int select_order(const PencilSVD& svd, const OrderPolicy& policy);

/// Reduced descriptor realization
///   Et = -Y_r* Lw X_r, At = -Y_r* Ls X_r, Bt = Y_r* V, Ct = W X_r, Dt = 0
/// with Y_r, X_r the first r singular vectors. Et is verified nonsingular
/// at construction. sigma keeps the singular values that justified r.
class ReducedModel {
 public:
  ReducedModel(Eigen::MatrixXcd E, Eigen::MatrixXcd A, Eigen::MatrixXcd B,
               Eigen::MatrixXcd C, Eigen::VectorXd sigma, bool is_real);

  const Eigen::MatrixXcd& E() const { return E_; }
  const Eigen::MatrixXcd& A() const { return A_; }
  const Eigen::MatrixXcd& B() const { return B_; }
  const Eigen::MatrixXcd& C() const { return C_; }
  const Eigen::MatrixXcd& D() const { return D_; }
  const Eigen::VectorXd& sigma() const { return sigma_; }
  bool is_real() const { return is_real_; }

  Eigen::Index order() const { return E_.rows(); }
  Eigen::Index inputs() const { return B_.cols(); }
  Eigen::Index outputs() const { return C_.rows(); }

 private:
  Eigen::MatrixXcd E_, A_, B_, C_, D_;
  Eigen::VectorXd sigma_;
  bool is_real_;
};

/// Projects the pencil onto the leading r singular directions. Throws
/// ROutOfRange unless 1 <= r <= min(nu, rho) and SingularEt when the
/// projected E is rank deficient (typically r splits a conjugate pair;
/// retry with r +/- 1 or another shift).
ReducedModel reduce(const LoewnerPencil& pencil, const PencilSVD& svd, int r);

/// Ht(s) = Ct (s Et - At)^{-1} Bt. Throws SingularPencil at poles.
Eigen::MatrixXcd eval_transfer(const ReducedModel& model, Complex s);

/// Eigenvalues of (At, Et), sorted by (real, imag).
std::vector<Complex> poles(const ReducedModel& model);

/// Real models use the descriptor-system JSON schema
/// {"n","m","p","E","A","B","C","D"}; complex models append the extra keys
/// "E_im","A_im","B_im","C_im" holding the imaginary parts. D is zero in
/// either case, and load rejects files where it is not.
ReducedModel load_model(const std::filesystem::path& path);
void save_model(const ReducedModel& model, const std::filesystem::path& path);

}  // namespace loewner

#endif  // LOEWNER_PENCIL_HPP
