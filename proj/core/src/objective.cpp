#include "l12glasso/objective.hpp"

#include <cmath>

namespace l12 {

void Dataset::validate() const {
  if (X.rows() != Y.rows()) {
    throw DimensionMismatch("Dataset: X and Y must share their row count");
  }
  if (X.rows() < 1 || X.cols() < 1 || Y.cols() < 1) {
    throw DimensionMismatch("Dataset: X and Y must be non-empty");
  }
  if (!X.allFinite() || !Y.allFinite()) {
    throw DimensionMismatch("Dataset: entries must be finite");
  }
}

void Hyperparams::validate() const {
  const bool finite = std::isfinite(lambda1) && std::isfinite(lambda2) &&
                      std::isfinite(gamma) && std::isfinite(tau) &&
                      std::isfinite(step_nu) && std::isfinite(outer_tol) &&
                      std::isfinite(inner_tol);
  if (!finite) throw InvalidHyperparams("Hyperparams: weights must be finite");
  if (lambda1 < 0 || lambda2 < 0 || gamma < 0 || tau < 0) {
    throw InvalidHyperparams("Hyperparams: penalty weights must be >= 0");
  }
  // tau <= lambda1 keeps the rowwise l1 - l2 penalty nonnegative
  // (|v|_1 >= |v|_2); tau > 0 without an l1 weight is unbounded below on
  // rank-deficient designs.
  if (tau > lambda1) {
    throw InvalidHyperparams("Hyperparams: tau must not exceed lambda1");
  }
  if (step_nu < 0) {
    throw InvalidHyperparams("Hyperparams: step_nu must be positive (or 0 for auto)");
  }
  if (outer_tol <= 0 || inner_tol <= 0) {
    throw InvalidHyperparams("Hyperparams: tolerances must be positive");
  }
  if (outer_max_iter < 1 || inner_max_iter < 1) {
    throw InvalidHyperparams("Hyperparams: iteration caps must be >= 1");
  }
}

double eval_g12(const Dataset& data, const DenseMatrix& B,
                const Hyperparams& hp) {
  data.validate();
  if (B.rows() != data.p() || B.cols() != data.q()) {
    throw DimensionMismatch("eval_g12: B must be p x q");
  }
  const double n = static_cast<double>(data.n());
  const double fit = (data.Y - data.X * B).squaredNorm() / n;
  const double l1 = B.cwiseAbs().sum();
  const double l21 = B.rowwise().norm().sum();
  return fit + hp.lambda1 * l1 - hp.tau * l21;
}

double eval_h(const Dataset& data, const SpdMatrix& Theta,
              const Hyperparams& hp) {
  data.validate();
  if (Theta.dim() != data.q()) {
    throw DimensionMismatch("eval_h: Theta must be q x q");
  }
  const double n = static_cast<double>(data.n());
  const DenseMatrix S = (data.Y.transpose() * data.Y) / n;
  const double tr = (S.array() * Theta.matrix().array()).sum();
  return tr - log_det_pd(Theta) + hp.lambda2 * Theta.matrix().cwiseAbs().sum();
}

double gfl_value(const DenseMatrix& B, const DenseMatrix& theta) {
  if (theta.rows() != theta.cols() || theta.rows() != B.cols()) {
    throw DimensionMismatch("gfl_value: theta must be q x q with q = cols(B)");
  }
  const Index q = theta.rows();
  double total = 0.0;
  for (Index k = 0; k < q; ++k) {
    for (Index m = 0; m < q; ++m) {
      if (k == m) continue;
      const double t = theta(k, m);
      if (t == 0.0) continue;
      const double fused = t > 0.0
                               ? (B.col(k) + B.col(m)).cwiseAbs().sum()
                               : (B.col(k) - B.col(m)).cwiseAbs().sum();
      total += std::abs(t) * fused;
    }
  }
  return total;
}

double eval_gfl(const DenseMatrix& B, const SpdMatrix& Theta) {
  return gfl_value(B, Theta.matrix());
}

double eval_total(const Dataset& data, const ModelEstimate& est,
                  const Hyperparams& hp) {
  return eval_g12(data, est.B, hp) + eval_h(data, est.Theta, hp) +
         hp.gamma * eval_gfl(est.B, est.Theta);
}

}  // namespace l12
