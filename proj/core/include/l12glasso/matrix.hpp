#pragma once

#include <Eigen/Dense>
#include <utility>

#include "l12glasso/errors.hpp"

namespace l12 {

using DenseMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Square, symmetric positive-definite matrix. Construction symmetrizes the
// input after checking symmetry to 1e-10 (relative to the largest entry) and
// verifying that a Cholesky factorization succeeds, so holders of an
// SpdMatrix never need to re-validate.
class SpdMatrix {
 public:
  explicit SpdMatrix(DenseMatrix m);

  static SpdMatrix identity(Index dim);

  const DenseMatrix& matrix() const { return m_; }
  Index dim() const { return m_.rows(); }
  double operator()(Index i, Index j) const { return m_(i, j); }

  Eigen::LLT<DenseMatrix> llt() const;
  DenseMatrix inverse() const;

 private:
  struct Unchecked {};
  SpdMatrix(DenseMatrix m, Unchecked) : m_(std::move(m)) {}
  DenseMatrix m_;
};

// prox of w|.|: sign(z) * max(|z| - w, 0).
double soft_threshold(double z, double w);

// Minimizer of (1/2)(a-z)^2 + up*max(a,0) + low*max(-a,0); the two slopes
// let positive and negative values be penalized differently.
double asym_soft_threshold(double z, double up, double low);

// Closed-form minimizer of
//   (1/2)[(a - z_a)^2 + (b - z_b)^2] + w * |a + s*b|,   s in {+1,-1}.
// If |z_a + s*z_b| > 2w the pair shrinks by w along (1, s); otherwise the
// result is the Euclidean projection of (z_a, z_b) onto {a + s*b = 0}.
std::pair<double, double> fusion_prox_pair(double z_a, double z_b, int s,
                                           double w);

// log det via Cholesky: 2 * sum(log diag(L)). The raw-matrix overload throws
// FactorizationFailed when a pivot is not strictly positive.
double log_det_pd(const SpdMatrix& m);
double log_det_pd(const DenseMatrix& m);

// AR(1) covariance, entry (j,k) = rho^|j-k|. Throws InvalidRho for |rho|>=1.
SpdMatrix ar1_covariance(Index dim, double rho);

}  // namespace l12
