#include "l12glasso/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "l12glasso/baselines.hpp"
#include "l12glasso/rng.hpp"
#include "l12glasso/solver.hpp"

namespace l12 {

SupportMetrics support_f1(const DenseMatrix& estimate, const DenseMatrix& truth,
                          double threshold, bool skip_diagonal) {
  if (estimate.rows() != truth.rows() || estimate.cols() != truth.cols()) {
    throw ShapeMismatch("support_f1: matrices must share their shape");
  }
  if (threshold < 0.0) {
    throw InvalidHyperparams("support_f1: threshold must be >= 0");
  }
  const double est_cut = threshold * estimate.cwiseAbs().maxCoeff();
  const double tru_cut = threshold * truth.cwiseAbs().maxCoeff();

  long tp = 0, fp = 0, fn = 0, nnz_est = 0, nnz_true = 0;
  for (Index i = 0; i < estimate.rows(); ++i) {
    for (Index j = 0; j < estimate.cols(); ++j) {
      if (skip_diagonal && i == j) continue;
      const bool est_nz = std::abs(estimate(i, j)) > est_cut;
      const bool tru_nz = std::abs(truth(i, j)) > tru_cut;
      nnz_est += est_nz;
      nnz_true += tru_nz;
      if (est_nz && tru_nz) ++tp;
      else if (est_nz) ++fp;
      else if (tru_nz) ++fn;
    }
  }

  SupportMetrics m;
  m.threshold = threshold;
  m.nnz_estimated = nnz_est;
  m.nnz_true = nnz_true;
  m.precision = (tp + fp) > 0 ? static_cast<double>(tp) / (tp + fp)
                              : (fn == 0 ? 1.0 : 0.0);
  m.recall = (tp + fn) > 0 ? static_cast<double>(tp) / (tp + fn) : 1.0;
  m.f1 = (m.precision + m.recall) > 0.0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  return m;
}

double regression_error(const Dataset& test, const DenseMatrix& B) {
  test.validate();
  if (B.rows() != test.p() || B.cols() != test.q()) {
    throw ShapeMismatch("regression_error: B must be p x q");
  }
  return (test.Y - test.X * B).squaredNorm() / static_cast<double>(test.n());
}

std::pair<Dataset, Dataset> holdout_split(const Dataset& data,
                                          double train_fraction,
                                          std::uint64_t seed) {
  data.validate();
  const Index n = data.n();
  const Index n_train = static_cast<Index>(std::llround(train_fraction * static_cast<double>(n)));
  if (n_train < 1 || n_train >= n) {
    throw DegenerateSplit("holdout_split: both parts must be non-empty");
  }

  std::vector<Index> idx(n);
  std::iota(idx.begin(), idx.end(), Index{0});
  Rng rng(seed);
  rng.shuffle(idx);
  std::vector<Index> train_idx(idx.begin(), idx.begin() + n_train);
  std::vector<Index> test_idx(idx.begin() + n_train, idx.end());
  std::sort(train_idx.begin(), train_idx.end());
  std::sort(test_idx.begin(), test_idx.end());

  auto take = [&](const std::vector<Index>& rows) {
    Dataset part;
    part.X.resize(static_cast<Index>(rows.size()), data.p());
    part.Y.resize(static_cast<Index>(rows.size()), data.q());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      part.X.row(static_cast<Index>(r)) = data.X.row(rows[r]);
      part.Y.row(static_cast<Index>(r)) = data.Y.row(rows[r]);
    }
    return part;
  };
  return {take(train_idx), take(test_idx)};
}

long count_nonzero(const DenseMatrix& m, double relative_threshold) {
  const double cut = relative_threshold * m.cwiseAbs().maxCoeff();
  long count = 0;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (std::abs(m(i, j)) > cut) ++count;
    }
  }
  return count;
}

namespace {

void run_sweep_point(const Dataset& train, const Dataset& test,
                     const DenseMatrix& gflasso_graph, const SweepOptions& opts,
                     SweepRow& row) {
  try {
    Hyperparams hp = opts.base;
    hp.lambda1 = row.lambda1;
    hp.lambda2 = row.lambda2;
    hp.gamma = row.gamma;
    hp.tau = row.tau;

    DenseMatrix B;
    std::optional<SpdMatrix> theta;
    if (opts.model == "lasso") {
      B = fit_multitask_lasso(train, hp.lambda1);
    } else if (opts.model == "mrce") {
      ModelEstimate est = fit_mrce(train, hp.lambda1, hp.lambda2, hp);
      B = std::move(est.B);
      theta = std::move(est.Theta);
    } else if (opts.model == "gflasso") {
      B = fit_gflasso(train, gflasso_graph, hp.lambda1, hp.gamma, hp);
    } else if (opts.model == "iclasso" || opts.model == "l12glasso") {
      ModelEstimate est = fit(train, hp);
      B = std::move(est.B);
      theta = std::move(est.Theta);
    } else {
      throw UsageError("grid_sweep: unknown model '" + opts.model + "'");
    }

    row.val_error = regression_error(test, B);
    row.nnz_b = count_nonzero(B, opts.support_threshold);
    if (opts.B_true) {
      row.f1_b = support_f1(B, *opts.B_true, opts.support_threshold);
    }
    if (opts.Theta_true && theta) {
      row.f1_theta = support_f1(theta->matrix(), *opts.Theta_true,
                                opts.support_threshold, /*skip_diagonal=*/true);
    }
    row.ok = true;
  } catch (const std::exception& e) {
    row.ok = false;
    row.error = e.what();
  }
}

}  // namespace

SweepReport grid_sweep(const Dataset& data, const GridSpec& grid,
                       const SweepOptions& opts) {
  if (grid.lambda1s.empty() || grid.lambda2s.empty() || grid.gammas.empty() ||
      grid.ratios.empty()) {
    throw InvalidHyperparams("grid_sweep: grid lists must be non-empty");
  }
  const bool known_model = opts.model == "lasso" || opts.model == "mrce" ||
                           opts.model == "gflasso" || opts.model == "iclasso" ||
                           opts.model == "l12glasso";
  if (!known_model) throw UsageError("grid_sweep: unknown model '" + opts.model + "'");

  auto [train, test] = holdout_split(data, opts.train_fraction, opts.seed);
  DenseMatrix gflasso_graph;
  if (opts.model == "gflasso") gflasso_graph = correlation_graph(train.Y);

  SweepReport report;
  for (double l1 : grid.lambda1s) {
    for (double l2 : grid.lambda2s) {
      for (double g : grid.gammas) {
        for (double ratio : grid.ratios) {
          SweepRow row;
          row.lambda1 = l1;
          row.lambda2 = l2;
          row.gamma = g;
          row.ratio = ratio;
          row.tau = (opts.model == "l12glasso" && ratio > 0.0) ? l1 / ratio : 0.0;
          report.rows.push_back(std::move(row));
        }
      }
    }
  }

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || report.rows.size() <= 1) {
    for (SweepRow& row : report.rows) {
      run_sweep_point(train, test, gflasso_graph, opts, row);
    }
  } else {
    std::vector<std::thread> workers;
    const std::size_t count = report.rows.size();
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w]() {
        for (std::size_t i = static_cast<std::size_t>(w); i < count;
             i += static_cast<std::size_t>(jobs)) {
          run_sweep_point(train, test, gflasso_graph, opts, report.rows[i]);
        }
      });
    }
    for (std::thread& t : workers) t.join();
  }

  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    if (!report.rows[i].ok) continue;
    if (report.best_index < 0 ||
        report.rows[i].val_error <
            report.rows[static_cast<std::size_t>(report.best_index)].val_error) {
      report.best_index = static_cast<int>(i);
    }
  }
  return report;
}

}  // namespace l12
