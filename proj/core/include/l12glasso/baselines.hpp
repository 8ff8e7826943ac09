#pragma once

#include <vector>

#include "l12glasso/objective.hpp"

namespace l12 {

// min_B (1/n)|Y - XB|_F^2 + lambda*|B|_1 by proximal gradient descent,
// driven to KKT-grade accuracy. Optional trace receives objective values.
DenseMatrix fit_multitask_lasso(const Dataset& data, double lambda,
                                std::vector<double>* trace = nullptr);

// B-step of the covariance-weighted objective
//   (1/n) tr((Y-XB)'(Y-XB) Omega) + lambda1*|B|_1,
// ISTA with backtracking. Exposed separately so the Omega = I reduction can
// be checked against fit_multitask_lasso.
DenseMatrix solve_weighted_lasso(const Dataset& data, const SpdMatrix& omega,
                                 double lambda1, const Hyperparams& hp,
                                 DenseMatrix B_init,
                                 std::vector<double>* trace = nullptr);

// Alternating multivariate regression with covariance estimation:
//   min (1/n)tr((Y-XB)'(Y-XB) Omega) - log det Omega
//       + lambda1*|B|_1 + lambda2*|Omega|_1.
// The Omega-step is a plain graphical lasso on the residual covariance.
// The returned estimate's Theta field holds Omega (the conditional
// precision of Y given X, not the marginal one); its objective_trace holds
// the jointly-descended objective (Omega penalty off-diagonal only).
ModelEstimate fit_mrce(const Dataset& data, double lambda1, double lambda2,
                       const Hyperparams& hp);

// Graph-guided fused lasso against a fixed signed coupling graph, solved by
// the shared B-subproblem machinery (the graph is never updated). The graph
// follows the precision-matrix sign convention: a negative entry fuses the
// pair with |beta_k - beta_m|_1.
DenseMatrix fit_gflasso(const Dataset& data, const DenseMatrix& graph,
                        double lambda1, double gamma, const Hyperparams& hp,
                        std::vector<double>* trace = nullptr);

// Default GFLasso graph: -corr(Y)_km where |corr| > threshold, else 0, so
// positively correlated outputs are fused toward equal coefficients.
DenseMatrix correlation_graph(const DenseMatrix& Y, double threshold = 0.5);

// Objective of fit_mrce as written (l1 over all Omega entries).
double mrce_objective(const Dataset& data, const DenseMatrix& B,
                      const SpdMatrix& omega, double lambda1, double lambda2);

}  // namespace l12
