#include "l12glasso/baselines.hpp"

#include <cmath>

#include "l12glasso/b_step.hpp"
#include "l12glasso/theta_step.hpp"

namespace l12 {

namespace {

double weighted_fit_term(const Dataset& data, const DenseMatrix& B,
                         const DenseMatrix& omega) {
  const DenseMatrix R = data.Y - data.X * B;
  return (R.cwiseProduct(R * omega)).sum() / static_cast<double>(data.n());
}

// Objective both MRCE block updates descend: the l1 term on Omega covers the
// off-diagonal only, matching the unpenalized-diagonal glasso step.
double mrce_joint(const Dataset& data, const DenseMatrix& B,
                  const SpdMatrix& omega, double lambda1, double lambda2) {
  DenseMatrix off = omega.matrix();
  off.diagonal().setZero();
  return weighted_fit_term(data, B, omega.matrix()) - log_det_pd(omega) +
         lambda1 * B.cwiseAbs().sum() + lambda2 * off.cwiseAbs().sum();
}

}  // namespace

DenseMatrix fit_multitask_lasso(const Dataset& data, double lambda,
                                std::vector<double>* trace) {
  if (lambda < 0.0) throw InvalidHyperparams("fit_multitask_lasso: lambda must be >= 0");
  Hyperparams hp;
  hp.lambda1 = lambda;
  hp.lambda2 = 0.0;
  hp.gamma = 0.0;
  hp.tau = 0.0;
  hp.inner_max_iter = 20000;
  hp.inner_tol = 1e-12;
  const DenseMatrix no_graph = DenseMatrix::Zero(data.q(), data.q());
  return solve_b_subproblem(data, no_graph,
                            DenseMatrix::Zero(data.p(), data.q()), hp, trace);
}

DenseMatrix solve_weighted_lasso(const Dataset& data, const SpdMatrix& omega,
                                 double lambda1, const Hyperparams& hp,
                                 DenseMatrix B_init,
                                 std::vector<double>* trace) {
  data.validate();
  if (omega.dim() != data.q()) {
    throw DimensionMismatch("solve_weighted_lasso: omega must be q x q");
  }
  const double n = static_cast<double>(data.n());

  Eigen::SelfAdjointEigenSolver<DenseMatrix> es_o(omega.matrix(),
                                                  Eigen::EigenvaluesOnly);
  const double omega_max = es_o.eigenvalues().maxCoeff();
  double nu = default_b_step_size(data) / std::max(omega_max, 1e-300);

  auto objective = [&](const DenseMatrix& B) {
    return weighted_fit_term(data, B, omega.matrix()) +
           lambda1 * B.cwiseAbs().sum();
  };

  DenseMatrix B = std::move(B_init);
  double f = objective(B);
  if (trace) {
    trace->clear();
    trace->push_back(f);
  }
  for (int iter = 0; iter < hp.inner_max_iter; ++iter) {
    const DenseMatrix grad =
        (2.0 / n) * (data.X.transpose() * (data.X * B - data.Y)) * omega.matrix();
    bool accepted = false;
    DenseMatrix candidate;
    double f_candidate = f;
    while (!accepted) {
      const double w = nu * lambda1;
      candidate = (B - nu * grad)
                      .unaryExpr([w](double z) { return soft_threshold(z, w); });
      f_candidate = objective(candidate);
      if (f_candidate <= f + 1e-12 * std::max(1.0, std::abs(f))) {
        accepted = true;
      } else {
        nu *= 0.5;
        if (nu < 1e-12) {
          throw StepSizeUnderflow("solve_weighted_lasso: step size underflow");
        }
      }
    }
    const bool converged =
        std::abs(f_candidate - f) <= hp.inner_tol * std::max(1.0, std::abs(f));
    B = std::move(candidate);
    f = f_candidate;
    if (trace) trace->push_back(f);
    if (converged) break;
  }
  return B;
}

double mrce_objective(const Dataset& data, const DenseMatrix& B,
                      const SpdMatrix& omega, double lambda1, double lambda2) {
  return weighted_fit_term(data, B, omega.matrix()) - log_det_pd(omega) +
         lambda1 * B.cwiseAbs().sum() +
         lambda2 * omega.matrix().cwiseAbs().sum();
}

ModelEstimate fit_mrce(const Dataset& data, double lambda1, double lambda2,
                       const Hyperparams& hp) {
  data.validate();
  hp.validate();
  if (lambda1 < 0.0 || lambda2 < 0.0) {
    throw InvalidHyperparams("fit_mrce: penalty weights must be >= 0");
  }
  const double n = static_cast<double>(data.n());
  const Index q = data.q();
  const AsymPenalty pen = flat_penalty(q, lambda2);

  DenseMatrix B = DenseMatrix::Zero(data.p(), q);
  DenseMatrix S0 = (data.Y.transpose() * data.Y) / n;
  SpdMatrix omega = default_theta_init(S0, lambda2);

  ModelEstimate est{std::move(B), std::move(omega), {}, false};
  for (int iter = 0; iter < hp.outer_max_iter; ++iter) {
    est.B = solve_weighted_lasso(data, est.Theta, lambda1, hp, std::move(est.B));

    const DenseMatrix R = data.Y - data.X * est.B;
    const DenseMatrix S_res = (R.transpose() * R) / n;
    est.Theta = glasso_asym(S_res, pen, est.Theta, hp);

    const double objective =
        mrce_joint(data, est.B, est.Theta, lambda1, lambda2);
    if (!std::isfinite(objective)) {
      throw NonFiniteObjective("fit_mrce: objective left the finite reals");
    }
    est.objective_trace.push_back(objective);
    const std::size_t t = est.objective_trace.size();
    if (t >= 2) {
      const double prev = est.objective_trace[t - 2];
      if (std::abs(objective - prev) <= hp.outer_tol * std::max(1.0, std::abs(prev))) {
        est.converged = true;
        break;
      }
    }
  }
  return est;
}

DenseMatrix fit_gflasso(const Dataset& data, const DenseMatrix& graph,
                        double lambda1, double gamma, const Hyperparams& hp,
                        std::vector<double>* trace) {
  if (graph.rows() != data.q() || graph.cols() != data.q()) {
    throw DimensionMismatch("fit_gflasso: graph must be q x q");
  }
  Hyperparams hpg = hp;
  hpg.lambda1 = lambda1;
  hpg.gamma = gamma;
  hpg.tau = 0.0;
  return solve_b_subproblem(data, graph,
                            DenseMatrix::Zero(data.p(), data.q()), hpg, trace);
}

DenseMatrix correlation_graph(const DenseMatrix& Y, double threshold) {
  const Index n = Y.rows();
  const Index q = Y.cols();
  DenseMatrix centered = Y.rowwise() - Y.colwise().mean();
  Vector scale(q);
  for (Index k = 0; k < q; ++k) {
    scale(k) = centered.col(k).norm();
  }
  DenseMatrix graph = DenseMatrix::Zero(q, q);
  if (n < 2) return graph;
  for (Index k = 0; k < q; ++k) {
    for (Index m = k + 1; m < q; ++m) {
      if (scale(k) == 0.0 || scale(m) == 0.0) continue;
      const double r = centered.col(k).dot(centered.col(m)) / (scale(k) * scale(m));
      if (std::abs(r) > threshold) {
        graph(k, m) = -r;
        graph(m, k) = -r;
      }
    }
  }
  return graph;
}

}  // namespace l12
