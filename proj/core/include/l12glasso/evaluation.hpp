#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "l12glasso/objective.hpp"

namespace l12 {

struct SupportMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double threshold = 0.0;
  long nnz_estimated = 0;
  long nnz_true = 0;
};

// Support recovery against ground truth. An entry counts as nonzero when
// |value| > threshold * max|matrix| (each matrix scaled by its own maximum).
// skip_diagonal drops diagonal entries from scoring (used for Theta, whose
// diagonal is always nonzero on the PD cone).
SupportMetrics support_f1(const DenseMatrix& estimate, const DenseMatrix& truth,
                          double threshold, bool skip_diagonal = false);

// (1/n_test) |Y_test - X_test B|_F^2.
double regression_error(const Dataset& test, const DenseMatrix& B);

// Seed-deterministic row-disjoint split; row order is preserved inside each
// part. Train size = round(train_fraction * n).
std::pair<Dataset, Dataset> holdout_split(const Dataset& data,
                                          double train_fraction,
                                          std::uint64_t seed);

long count_nonzero(const DenseMatrix& m, double relative_threshold);

// Cartesian hyperparameter grid, enumerated lambda1 -> lambda2 -> gamma ->
// ratio in declared order. ratio = lambda1/tau applies to the l12glasso
// model only; the others ignore it.
struct GridSpec {
  std::vector<double> lambda1s{0.1};
  std::vector<double> lambda2s{0.1};
  std::vector<double> gammas{0.05};
  std::vector<double> ratios{10.0};
};

struct SweepOptions {
  std::string model = "l12glasso";  // lasso | mrce | gflasso | iclasso | l12glasso
  double train_fraction = 0.75;
  std::uint64_t seed = 0;
  double support_threshold = 1e-4;
  int jobs = 1;
  Hyperparams base;
  std::optional<DenseMatrix> B_true;
  std::optional<DenseMatrix> Theta_true;
};

struct SweepRow {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double gamma = 0.0;
  double ratio = 0.0;
  double tau = 0.0;
  bool ok = false;
  std::string error;
  double val_error = 0.0;
  long nnz_b = 0;
  std::optional<SupportMetrics> f1_b;
  std::optional<SupportMetrics> f1_theta;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  int best_index = -1;  // argmin of val_error over ok rows, first on ties
};

// Fits every grid point on the train part, scores validation regression
// error (and support F1 when truth is supplied). Per-point failures are
// recorded in their row and the sweep continues. jobs > 1 distributes
// points over threads; output is index-ordered and deterministic.
SweepReport grid_sweep(const Dataset& data, const GridSpec& grid,
                       const SweepOptions& opts);

}  // namespace l12
