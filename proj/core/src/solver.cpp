#include "l12glasso/solver.hpp"

#include <cmath>

#include "l12glasso/b_step.hpp"
#include "l12glasso/theta_step.hpp"

namespace l12 {

double fit_objective(const Dataset& data, const DenseMatrix& B,
                     const SpdMatrix& theta, const Hyperparams& hp) {
  const double n = static_cast<double>(data.n());
  const DenseMatrix S = (data.Y.transpose() * data.Y) / n;
  return eval_g12(data, B, hp) +
         glasso_objective(S, fusion_weights(B, hp), theta.matrix());
}

ModelEstimate fit(const Dataset& data, const Hyperparams& hp,
                  const std::optional<ModelEstimate>& init, FitOrder order) {
  data.validate();
  hp.validate();
  const double n = static_cast<double>(data.n());
  const DenseMatrix S = (data.Y.transpose() * data.Y) / n;

  DenseMatrix B = init ? init->B : DenseMatrix::Zero(data.p(), data.q());
  SpdMatrix theta = init ? init->Theta : default_theta_init(S, hp.lambda2);
  if (B.rows() != data.p() || B.cols() != data.q() || theta.dim() != data.q()) {
    throw DimensionMismatch("fit: init estimate has wrong dimensions");
  }

  ModelEstimate est{std::move(B), std::move(theta), {}, false};

  for (int iter = 0; iter < hp.outer_max_iter; ++iter) {
    if (order == FitOrder::b_first) {
      est.B = solve_b_subproblem(data, est.Theta.matrix(), std::move(est.B), hp);
      est.Theta = solve_theta_subproblem(data, est.B, est.Theta, hp);
    } else {
      est.Theta = solve_theta_subproblem(data, est.B, est.Theta, hp);
      est.B = solve_b_subproblem(data, est.Theta.matrix(), std::move(est.B), hp);
    }

    const double objective =
        eval_g12(data, est.B, hp) +
        glasso_objective(S, fusion_weights(est.B, hp), est.Theta.matrix());
    if (!std::isfinite(objective)) {
      throw NonFiniteObjective("fit: objective left the finite reals");
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

std::vector<FitPathEntry> fit_path(const Dataset& data,
                                   const std::vector<Hyperparams>& grid) {
  if (grid.empty()) throw InvalidHyperparams("fit_path: grid must be non-empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i].lambda1 > grid[i - 1].lambda1) {
      throw InvalidHyperparams("fit_path: grid must be sorted by decreasing lambda1");
    }
  }

  std::vector<FitPathEntry> path;
  path.reserve(grid.size());
  std::optional<ModelEstimate> warm;
  for (const Hyperparams& hp : grid) {
    FitPathEntry entry;
    try {
      entry.estimate = fit(data, hp, warm);
      entry.ok = true;
      warm = entry.estimate;
    } catch (const Error& e) {
      entry.ok = false;
      entry.error = e.what();
    }
    path.push_back(std::move(entry));
  }
  return path;
}

}  // namespace l12
