#pragma once

#include <vector>

#include "l12glasso/objective.hpp"

namespace l12 {

// One fused column pair (k, m), k < m, with the sign of the coupling entry
// and the total fusion weight gamma * (|theta_km| + |theta_mk|) carried by
// the ordered objective sum. Zero-weight pairs are never stored.
struct FusionComponent {
  Index k = 0;
  Index m = 0;
  int sign = 1;
  double weight = 0.0;
};

// Splitting of the nonsmooth part of the B-subproblem into an l1 block plus
// one block per fused pair, with convex proximal-average weights. alphas[0]
// belongs to the l1 block, alphas[1 + i] to components[i].
struct ProxDecomposition {
  double l1_weight = 0.0;
  std::vector<FusionComponent> components;
  std::vector<double> alphas;

  void validate() const;
};

// Gradient of the smooth part (1/n)|Y - XB|_F^2 - tau*|B|_{2,1}:
//   (2/n) X'(XB - Y) - tau * Sigma * B,
// Sigma = diag(1/|row_i|_2), with the subgradient at a zero row taken as 0
// so zero rows stay stationary.
DenseMatrix b_smooth_gradient(const Dataset& data, const DenseMatrix& B,
                              const Hyperparams& hp);

// One component per unordered pair with theta_km != 0 (skipped entirely when
// gamma == 0), uniform alphas over all blocks including the l1 block.
ProxDecomposition build_prox_decomposition(const DenseMatrix& theta,
                                           const Hyperparams& hp);

// Proximal-average step: sum_i alpha_i * prox_{(nu/alpha_i) g_i}(Z), where
// g_0 = l1_weight * |.|_1 and g_i applies the pairwise fusion prox to the
// component's column pair in every row, identity elsewhere.
DenseMatrix proximal_average_step(const DenseMatrix& Z,
                                  const ProxDecomposition& decomp, double nu);

// PA-PG descent on f_theta(B) = g12(B) + gamma * GFL(B, -theta) for fixed
// theta, with halving backtracking on the true objective. theta only enters
// through entry signs and magnitudes, so any symmetric coupling matrix is
// accepted (the GFLasso baseline passes a fixed non-PD graph through here).
// Throws StepSizeUnderflow when backtracking shrinks the step below 1e-12.
// When trace is non-null it receives the objective value at the initial
// point and after every accepted iteration.
DenseMatrix solve_b_subproblem(const Dataset& data, const DenseMatrix& theta,
                               DenseMatrix B_init, const Hyperparams& hp,
                               std::vector<double>* trace = nullptr);

// 0.5 * n / sigma_max(X'X), the default gradient step for the quadratic part.
double default_b_step_size(const Dataset& data);

}  // namespace l12
