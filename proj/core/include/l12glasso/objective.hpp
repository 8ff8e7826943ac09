#pragma once

#include <vector>

#include "l12glasso/matrix.hpp"

namespace l12 {

// Problem data: X holds n x p inputs (genotypes), Y holds n x q outputs
// (expression values), one sample per row.
struct Dataset {
  DenseMatrix X;
  DenseMatrix Y;

  Index n() const { return X.rows(); }
  Index p() const { return X.cols(); }
  Index q() const { return Y.cols(); }

  void validate() const;
};

// Penalty weights and solver controls for the fused objective
//
//   (1/n)|Y - XB|_F^2 + lambda1*|B|_1 - tau*|B|_{2,1}
//   + (1/n)tr(Y'Y Theta) - log det Theta + lambda2*|Theta|_1
//   + gamma * sum_{k != m} |theta_km| * |beta_.k + sgn(theta_km) beta_.m|_1
//
// step_nu == 0 lets the B-step derive its step size from the data
// (0.5 * n / sigma_max(X'X)); a positive value overrides it.
struct Hyperparams {
  double lambda1 = 0.1;
  double lambda2 = 0.1;
  double gamma = 0.0;
  double tau = 0.0;
  double step_nu = 0.0;
  double outer_tol = 1e-6;
  int outer_max_iter = 100;
  int inner_max_iter = 500;
  double inner_tol = 1e-6;

  void validate() const;
};

struct ModelEstimate {
  DenseMatrix B;
  SpdMatrix Theta = SpdMatrix::identity(1);
  std::vector<double> objective_trace;
  bool converged = false;
};

// (1/n)|Y - XB|_F^2 + lambda1*|B|_1 - tau*|B|_{2,1}.
double eval_g12(const Dataset& data, const DenseMatrix& B,
                const Hyperparams& hp);

// (1/n)tr(Y'Y Theta) - log det Theta + lambda2*|Theta|_1 (all entries,
// diagonal included; the theta-step solver treats the diagonal separately
// but this evaluator reports the objective as written).
double eval_h(const Dataset& data, const SpdMatrix& Theta,
              const Hyperparams& hp);

// Graph-guided fusion penalty, summed over ordered pairs k != m:
//   sum |theta_km| * |beta_.k + sgn(theta_km) beta_.m|_1.
// Self-pairs are excluded; sgn(0) = 0 (moot, the |theta| factor vanishes).
double eval_gfl(const DenseMatrix& B, const SpdMatrix& Theta);

// Same sum for an arbitrary symmetric coupling matrix (the GFLasso baseline
// routes a fixed, not necessarily PD, graph through here).
double gfl_value(const DenseMatrix& B, const DenseMatrix& theta);

// eval_g12 + eval_h + gamma * eval_gfl.
double eval_total(const Dataset& data, const ModelEstimate& est,
                  const Hyperparams& hp);

}  // namespace l12
