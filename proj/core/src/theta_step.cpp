#include "l12glasso/theta_step.hpp"

#include <cmath>
#include <vector>

namespace l12 {

namespace {

constexpr double kSweepTol = 1e-8;
constexpr int kColumnIters = 100;

// Raw coordinate descent used by both the public column solver and the BCD
// driver; H is trusted to have a strictly positive diagonal.
Vector cd_asym_quadratic(const DenseMatrix& H, const Vector& lin,
                         const Vector& up, const Vector& low, Vector alpha,
                         int iters) {
  const Index d = H.rows();
  Vector h_alpha = H * alpha;
  for (int sweep = 0; sweep < iters; ++sweep) {
    double max_change = 0.0;
    for (Index k = 0; k < d; ++k) {
      const double hkk = H(k, k);
      if (!(hkk > 0.0)) {
        throw NotPositiveDefinite("cd_asym_quadratic: nonpositive diagonal");
      }
      const double residual = lin(k) + h_alpha(k) - hkk * alpha(k);
      const double z = -residual / hkk;
      const double updated = asym_soft_threshold(z, up(k) / hkk, low(k) / hkk);
      const double delta = updated - alpha(k);
      if (delta != 0.0) {
        h_alpha.noalias() += H.col(k) * delta;
        alpha(k) = updated;
        max_change = std::max(max_change, std::abs(delta));
      }
    }
    const double scale = std::max(1.0, alpha.cwiseAbs().maxCoeff());
    if (max_change <= kSweepTol * scale) break;
  }
  return alpha;
}

}  // namespace

void AsymPenalty::validate() const {
  if (up.rows() != up.cols() || low.rows() != low.cols() ||
      up.rows() != low.rows()) {
    throw DimensionMismatch("AsymPenalty: up and low must be square, same size");
  }
  const double asym = (up - up.transpose()).cwiseAbs().maxCoeff() +
                      (low - low.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12) {
    throw InvalidHyperparams("AsymPenalty: weights must be symmetric");
  }
  if (up.minCoeff() < 0.0 || low.minCoeff() < 0.0) {
    throw InvalidHyperparams("AsymPenalty: weights must be >= 0");
  }
  if (up.diagonal().cwiseAbs().maxCoeff() > 0.0 ||
      low.diagonal().cwiseAbs().maxCoeff() > 0.0) {
    throw InvalidHyperparams("AsymPenalty: diagonal must be zero");
  }
}

AsymPenalty fusion_weights(const DenseMatrix& B, const Hyperparams& hp) {
  const Index q = B.cols();
  AsymPenalty pen;
  pen.up = DenseMatrix::Zero(q, q);
  pen.low = DenseMatrix::Zero(q, q);
  for (Index k = 0; k < q; ++k) {
    for (Index m = k + 1; m < q; ++m) {
      double up = hp.lambda2;
      double low = hp.lambda2;
      if (hp.gamma > 0.0) {
        up += hp.gamma * (B.col(k) + B.col(m)).cwiseAbs().sum();
        low += hp.gamma * (B.col(k) - B.col(m)).cwiseAbs().sum();
      }
      pen.up(k, m) = pen.up(m, k) = up;
      pen.low(k, m) = pen.low(m, k) = low;
    }
  }
  return pen;
}

AsymPenalty flat_penalty(Index q, double lambda2) {
  AsymPenalty pen;
  pen.up = DenseMatrix::Constant(q, q, lambda2);
  pen.low = DenseMatrix::Constant(q, q, lambda2);
  pen.up.diagonal().setZero();
  pen.low.diagonal().setZero();
  return pen;
}

Vector solve_penalized_column(const SpdMatrix& H, const Vector& lin,
                              const Vector& up, const Vector& low,
                              Vector alpha_init, int iters) {
  const Index d = H.dim();
  if (lin.size() != d || up.size() != d || low.size() != d ||
      alpha_init.size() != d) {
    throw DimensionMismatch("solve_penalized_column: vector sizes must match H");
  }
  if (up.minCoeff() < 0.0 || low.minCoeff() < 0.0) {
    throw InvalidHyperparams("solve_penalized_column: slopes must be >= 0");
  }
  return cd_asym_quadratic(H.matrix(), lin, up, low, std::move(alpha_init),
                           iters);
}

double glasso_objective(const DenseMatrix& S, const AsymPenalty& penalty,
                        const DenseMatrix& theta) {
  double value = (S.array() * theta.array()).sum() - log_det_pd(theta);
  const Index q = theta.rows();
  for (Index k = 0; k < q; ++k) {
    for (Index m = 0; m < q; ++m) {
      if (k == m) continue;
      const double t = theta(k, m);
      value += t > 0.0 ? penalty.up(k, m) * t : penalty.low(k, m) * (-t);
    }
  }
  return value;
}

SpdMatrix default_theta_init(const DenseMatrix& S, double lambda2) {
  const Index q = S.rows();
  DenseMatrix theta = DenseMatrix::Zero(q, q);
  for (Index k = 0; k < q; ++k) {
    const double denom = S(k, k) + lambda2;
    if (!(denom > 0.0)) {
      throw NotPositiveDefinite("default_theta_init: S_kk + lambda2 must be > 0");
    }
    theta(k, k) = 1.0 / denom;
  }
  return SpdMatrix(std::move(theta));
}

SpdMatrix glasso_asym(const DenseMatrix& S, const AsymPenalty& penalty,
                      const SpdMatrix& theta_init, const Hyperparams& hp) {
  const Index q = S.rows();
  if (S.cols() != q) throw DimensionMismatch("glasso_asym: S must be square");
  if (penalty.up.rows() != q || theta_init.dim() != q) {
    throw DimensionMismatch("glasso_asym: penalty/init size must match S");
  }
  penalty.validate();
  for (Index j = 0; j < q; ++j) {
    if (!(S(j, j) > 0.0)) {
      throw NotPositiveDefinite(
          "glasso_asym: S has a nonpositive diagonal entry");
    }
  }

  DenseMatrix theta = theta_init.matrix();
  if (q == 1) {
    theta(0, 0) = 1.0 / S(0, 0);
    return SpdMatrix(std::move(theta));
  }

  std::vector<Index> others(q - 1);
  DenseMatrix V(q - 1, q - 1);
  Vector w_oj(q - 1), lin(q - 1), up(q - 1), low(q - 1), alpha(q - 1);

  const int max_sweeps = hp.inner_max_iter;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    // Refresh W = Theta^{-1} once per sweep; the per-column identities keep
    // it consistent in between.
    Eigen::LLT<DenseMatrix> llt(theta);
    if (llt.info() != Eigen::Success) {
      throw NotPositiveDefinite("glasso_asym: iterate left the PD cone");
    }
    DenseMatrix W = llt.solve(DenseMatrix::Identity(q, q));
    const DenseMatrix theta_before = theta;

    for (Index j = 0; j < q; ++j) {
      Index pos = 0;
      for (Index k = 0; k < q; ++k) {
        if (k != j) others[pos++] = k;
      }
      for (Index a = 0; a < q - 1; ++a) {
        w_oj(a) = W(others[a], j);
        lin(a) = S(others[a], j);
        up(a) = penalty.up(others[a], j);
        low(a) = penalty.low(others[a], j);
        alpha(a) = theta(others[a], j);
        for (Index b = 0; b < q - 1; ++b) V(a, b) = W(others[a], others[b]);
      }
      // V = Theta_11^{-1} via the Schur complement of W.
      V.noalias() -= (w_oj * w_oj.transpose()) / W(j, j);
      V = ((V + V.transpose()) * 0.5).eval();

      const double sjj = S(j, j);
      // Column subproblem: (1/2) a'(sjj V)a + S_oj'a + asymmetric penalty.
      alpha = cd_asym_quadratic(sjj * V, lin, up, low, alpha, kColumnIters);

      const Vector v_alpha = V * alpha;
      const double theta_jj = 1.0 / sjj + alpha.dot(v_alpha);
      for (Index a = 0; a < q - 1; ++a) {
        theta(others[a], j) = alpha(a);
        theta(j, others[a]) = alpha(a);
      }
      theta(j, j) = theta_jj;

      // Blockwise inverse: W_11 = V + sjj (Va)(Va)', W_oj = -sjj Va,
      // W_jj = sjj (the unpenalized diagonal pins the Schur complement).
      for (Index a = 0; a < q - 1; ++a) {
        W(others[a], j) = -sjj * v_alpha(a);
        W(j, others[a]) = W(others[a], j);
        for (Index b = 0; b < q - 1; ++b) {
          W(others[a], others[b]) = V(a, b) + sjj * v_alpha(a) * v_alpha(b);
        }
      }
      W(j, j) = sjj;
    }

    const double change = (theta - theta_before).cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, theta_before.cwiseAbs().maxCoeff());
    if (change <= kSweepTol * scale) break;
  }
  return SpdMatrix(std::move(theta));
}

SpdMatrix solve_theta_subproblem(const Dataset& data, const DenseMatrix& B,
                                 const SpdMatrix& theta_init,
                                 const Hyperparams& hp) {
  data.validate();
  hp.validate();
  if (B.rows() != data.p() || B.cols() != data.q()) {
    throw DimensionMismatch("solve_theta_subproblem: B must be p x q");
  }
  const double n = static_cast<double>(data.n());
  const DenseMatrix S = (data.Y.transpose() * data.Y) / n;
  return glasso_asym(S, fusion_weights(B, hp), theta_init, hp);
}

}  // namespace l12
