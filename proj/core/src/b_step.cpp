#include "l12glasso/b_step.hpp"

#include <cmath>
#include <cstdlib>

namespace l12 {

namespace {

constexpr double kMinStep = 1e-12;
constexpr double kZeroRowNorm = 1e-12;

// f_theta(B) evaluated through the decomposition so the solver and its
// backtracking always agree with eval_g12 + gamma * eval_gfl.
double b_objective(const Dataset& data, const DenseMatrix& B,
                   const Hyperparams& hp, const ProxDecomposition& decomp) {
  const double n = static_cast<double>(data.n());
  double f = (data.Y - data.X * B).squaredNorm() / n;
  f += hp.lambda1 * B.cwiseAbs().sum();
  f -= hp.tau * B.rowwise().norm().sum();
  for (const FusionComponent& c : decomp.components) {
    const double sd = c.sign;
    f += c.weight * (B.col(c.k) + sd * B.col(c.m)).cwiseAbs().sum();
  }
  return f;
}

}  // namespace

void ProxDecomposition::validate() const {
  if (alphas.size() != components.size() + 1) {
    throw DimensionMismatch(
        "ProxDecomposition: need one alpha per component plus the l1 block");
  }
  double sum = 0.0;
  for (double a : alphas) {
    if (a <= 0.0) throw InvalidHyperparams("ProxDecomposition: alphas must be positive");
    sum += a;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw InvalidHyperparams("ProxDecomposition: alphas must sum to 1");
  }
  if (l1_weight < 0.0) {
    throw InvalidHyperparams("ProxDecomposition: l1_weight must be >= 0");
  }
  for (const FusionComponent& c : components) {
    if (c.k >= c.m || c.weight <= 0.0 || std::abs(c.sign) != 1) {
      throw InvalidHyperparams("ProxDecomposition: malformed fusion component");
    }
  }
}

DenseMatrix b_smooth_gradient(const Dataset& data, const DenseMatrix& B,
                              const Hyperparams& hp) {
  data.validate();
  if (B.rows() != data.p() || B.cols() != data.q()) {
    throw DimensionMismatch("b_smooth_gradient: B must be p x q");
  }
  const double n = static_cast<double>(data.n());
  DenseMatrix grad = (2.0 / n) * (data.X.transpose() * (data.X * B - data.Y));
  if (hp.tau > 0.0) {
    for (Index i = 0; i < B.rows(); ++i) {
      const double norm = B.row(i).norm();
      if (norm > 0.0) grad.row(i) -= (hp.tau / norm) * B.row(i);
    }
  }
  return grad;
}

ProxDecomposition build_prox_decomposition(const DenseMatrix& theta,
                                           const Hyperparams& hp) {
  if (theta.rows() != theta.cols()) {
    throw DimensionMismatch("build_prox_decomposition: theta must be square");
  }
  ProxDecomposition decomp;
  decomp.l1_weight = hp.lambda1;
  if (hp.gamma > 0.0) {
    const Index q = theta.rows();
    for (Index k = 0; k < q; ++k) {
      for (Index m = k + 1; m < q; ++m) {
        const double t = theta(k, m);
        if (t == 0.0) continue;
        const double w = hp.gamma * (std::abs(t) + std::abs(theta(m, k)));
        if (w <= 0.0) continue;
        decomp.components.push_back(
            FusionComponent{k, m, t > 0.0 ? 1 : -1, w});
      }
    }
  }
  const std::size_t blocks = decomp.components.size() + 1;
  decomp.alphas.assign(blocks, 1.0 / static_cast<double>(blocks));
  return decomp;
}

DenseMatrix proximal_average_step(const DenseMatrix& Z,
                                  const ProxDecomposition& decomp, double nu) {
  decomp.validate();
  if (nu <= 0.0) throw InvalidHyperparams("proximal_average_step: nu must be > 0");

  const double alpha0 = decomp.alphas[0];
  const double w0 = nu * decomp.l1_weight / alpha0;
  DenseMatrix result =
      alpha0 * Z.unaryExpr([w0](double z) { return soft_threshold(z, w0); });

  // Every fusion block is the identity away from its column pair, so its
  // alpha_i * prox_i(Z) contribution is alpha_i * Z plus a two-column
  // correction; accumulate the shared alpha_i * Z part in one shot.
  double rest = 0.0;
  for (std::size_t i = 1; i < decomp.alphas.size(); ++i) rest += decomp.alphas[i];
  result.noalias() += rest * Z;

  for (std::size_t i = 0; i < decomp.components.size(); ++i) {
    const FusionComponent& c = decomp.components[i];
    const double alpha = decomp.alphas[i + 1];
    const double w = nu * c.weight / alpha;
    for (Index j = 0; j < Z.rows(); ++j) {
      const auto [a, b] = fusion_prox_pair(Z(j, c.k), Z(j, c.m), c.sign, w);
      result(j, c.k) += alpha * (a - Z(j, c.k));
      result(j, c.m) += alpha * (b - Z(j, c.m));
    }
  }
  return result;
}

double default_b_step_size(const Dataset& data) {
  const DenseMatrix xtx = data.X.transpose() * data.X;
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(xtx, Eigen::EigenvaluesOnly);
  const double sigma_max = es.eigenvalues().maxCoeff();
  if (!(sigma_max > 0.0)) return 1.0;
  return 0.5 * static_cast<double>(data.n()) / sigma_max;
}

DenseMatrix solve_b_subproblem(const Dataset& data, const DenseMatrix& theta,
                               DenseMatrix B_init, const Hyperparams& hp,
                               std::vector<double>* trace) {
  data.validate();
  hp.validate();
  if (B_init.rows() != data.p() || B_init.cols() != data.q()) {
    throw DimensionMismatch("solve_b_subproblem: B_init must be p x q");
  }
  if (theta.rows() != data.q() || theta.cols() != data.q()) {
    throw DimensionMismatch("solve_b_subproblem: theta must be q x q");
  }

  const ProxDecomposition decomp = build_prox_decomposition(theta, hp);
  double nu = hp.step_nu > 0.0 ? hp.step_nu : default_b_step_size(data);

  DenseMatrix B = std::move(B_init);
  double f = b_objective(data, B, hp, decomp);
  if (trace) {
    trace->clear();
    trace->push_back(f);
  }

  // The averaged prox has a fixed-point bias of order nu, so a stall at the
  // current step is not yet convergence: halving nu tightens the proximal
  // average toward the exact prox and usually resumes progress. Convergence
  // is declared after several consecutive halvings stop paying off. A step
  // that still ascends beyond rounding noise at the minimum step signals a
  // genuinely misbehaving objective (tau at its limit).
  int stalls = 0;
  constexpr int kMaxStalls = 5;
  bool pinned = false;
  for (int iter = 0; iter < hp.inner_max_iter && !pinned; ++iter) {
    const DenseMatrix grad = b_smooth_gradient(data, B, hp);
    DenseMatrix candidate;
    double f_candidate = f;
    while (true) {
      candidate = proximal_average_step(B - nu * grad, decomp, nu);
      f_candidate = b_objective(data, candidate, hp, decomp);
      if (std::isfinite(f_candidate) &&
          f_candidate <= f + 1e-12 * std::max(1.0, std::abs(f))) {
        break;
      }
      nu *= 0.5;
      if (nu < kMinStep) {
        if (!std::isfinite(f_candidate) ||
            f_candidate > f + 1e-9 * std::max(1.0, std::abs(f))) {
          throw StepSizeUnderflow(
              "solve_b_subproblem: step size underflow (tau too large?)");
        }
        pinned = true;  // within rounding noise of a nonsmooth stationary point
        break;
      }
    }
    if (pinned) break;
    const double progress = f - f_candidate;
    if (f_candidate < f) {
      B = std::move(candidate);
      f = f_candidate;
      if (trace) trace->push_back(f);
    }
    if (progress <= hp.inner_tol * std::max(1.0, std::abs(f))) {
      ++stalls;
      if (stalls >= kMaxStalls) break;
      nu *= 0.5;
      if (nu < kMinStep) break;
    } else {
      stalls = 0;
    }
  }

  // Rows indistinguishable from zero are snapped to exact zero, matching the
  // zero-row subgradient convention of the smooth part.
  for (Index i = 0; i < B.rows(); ++i) {
    const double norm = B.row(i).norm();
    if (norm > 0.0 && norm < kZeroRowNorm) B.row(i).setZero();
  }
  return B;
}

}  // namespace l12
