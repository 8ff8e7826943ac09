#pragma once

#include "l12glasso/objective.hpp"

namespace l12 {

// Entrywise slopes of the piecewise-linear theta penalty: up_km applies to
// theta_km > 0, low_km to theta_km < 0. Symmetric, zero diagonal.
struct AsymPenalty {
  DenseMatrix up;
  DenseMatrix low;

  void validate() const;
};

// For fixed B the coupling term contributes, per ordered off-diagonal entry,
//   lambda2 + gamma * |beta_.k + beta_.m|_1   on the positive side and
//   lambda2 + gamma * |beta_.k - beta_.m|_1   on the negative side.
AsymPenalty fusion_weights(const DenseMatrix& B, const Hyperparams& hp);

// Uniform graphical-lasso slopes (up = low = lambda2 off-diagonal).
AsymPenalty flat_penalty(Index q, double lambda2);

// Coordinate descent on
//   (1/2) a'Ha + lin'a + sum_j [up_j max(a_j,0) + low_j max(-a_j,0)],
// each coordinate solved exactly by the asymmetric soft threshold. Stops at
// relative change < 1e-8 or after `iters` sweeps.
Vector solve_penalized_column(const SpdMatrix& H, const Vector& lin,
                              const Vector& up, const Vector& low,
                              Vector alpha_init, int iters);

// Block coordinate descent over the columns of Theta for
//   tr(S Theta) - log det Theta + asymmetric off-diagonal penalties,
// with the diagonal left unpenalized (the column update pins the Schur
// complement at 1/S_jj). W = Theta^{-1} is maintained through the blockwise
// inverse identities and refreshed by a Cholesky solve at each sweep.
SpdMatrix glasso_asym(const DenseMatrix& S, const AsymPenalty& penalty,
                      const SpdMatrix& theta_init, const Hyperparams& hp);

// S = (1/n) Y'Y, penalties from fusion_weights(B).
SpdMatrix solve_theta_subproblem(const Dataset& data, const DenseMatrix& B,
                                 const SpdMatrix& theta_init,
                                 const Hyperparams& hp);

// diag(1 / (S_kk + lambda2)).
SpdMatrix default_theta_init(const DenseMatrix& S, double lambda2);

// Value the BCD descends: tr(S Theta) - log det Theta plus the asymmetric
// off-diagonal penalty (no diagonal term). Exposed for descent tests.
double glasso_objective(const DenseMatrix& S, const AsymPenalty& penalty,
                        const DenseMatrix& theta);

}  // namespace l12
