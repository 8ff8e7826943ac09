#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "l12glasso/evaluation.hpp"
#include "l12glasso/simulator.hpp"
#include "test_util.hpp"

using namespace l12;
using testutil::random_dataset;
using testutil::random_matrix;

TEST_CASE("support_f1 perfect recovery and harmonic mean") {
  Rng rng(81);
  DenseMatrix truth = random_matrix(4, 4, rng);
  truth(0, 0) = truth(1, 2) = 0.0;
  const SupportMetrics perfect = support_f1(truth, truth, 1e-6);
  CHECK(perfect.precision == 1.0);
  CHECK(perfect.recall == 1.0);
  CHECK(perfect.f1 == 1.0);

  // P = 1, R = 0.5 -> F1 = 2/3: estimate finds half the true support with
  // no false positives.
  DenseMatrix t(2, 2), e(2, 2);
  t << 1.0, 1.0, 0.0, 0.0;
  e << 1.0, 0.0, 0.0, 0.0;
  const SupportMetrics m = support_f1(e, t, 1e-6);
  CHECK(m.precision == 1.0);
  CHECK(m.recall == 0.5);
  CHECK(m.f1 == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("support_f1 matches an entry-counting oracle") {
  Rng rng(82);
  for (int trial = 0; trial < 20; ++trial) {
    DenseMatrix est = random_matrix(5, 5, rng);
    DenseMatrix truth = random_matrix(5, 5, rng);
    // sprinkle exact zeros
    for (Index i = 0; i < 5; ++i) {
      est(i, (i * 2) % 5) = 0.0;
      truth((i * 3) % 5, i) = 0.0;
    }
    const double thr = 1e-4;
    const SupportMetrics m = support_f1(est, truth, thr);

    const double ce = thr * est.cwiseAbs().maxCoeff();
    const double ct = thr * truth.cwiseAbs().maxCoeff();
    long tp = 0, fp = 0, fn = 0;
    for (Index i = 0; i < 5; ++i) {
      for (Index j = 0; j < 5; ++j) {
        const bool a = std::abs(est(i, j)) > ce;
        const bool b = std::abs(truth(i, j)) > ct;
        tp += a && b;
        fp += a && !b;
        fn += !a && b;
      }
    }
    const double P = tp + fp > 0 ? double(tp) / (tp + fp) : 1.0;
    const double R = tp + fn > 0 ? double(tp) / (tp + fn) : 1.0;
    CHECK(m.precision == doctest::Approx(P));
    CHECK(m.recall == doctest::Approx(R));
    CHECK(m.f1 == doctest::Approx(P + R > 0 ? 2 * P * R / (P + R) : 0.0));
  }
}

TEST_CASE("support_f1 conventions and properties") {
  SUBCASE("empty supports on both sides give F1 = 1") {
    DenseMatrix z = DenseMatrix::Zero(3, 3);
    const SupportMetrics m = support_f1(z, z, 1e-4);
    CHECK(m.precision == 1.0);
    CHECK(m.recall == 1.0);
    CHECK(m.f1 == 1.0);
  }
  SUBCASE("no predictions against a non-empty truth scores zero") {
    DenseMatrix z = DenseMatrix::Zero(3, 3);
    DenseMatrix t = DenseMatrix::Ones(3, 3);
    const SupportMetrics m = support_f1(z, t, 1e-4);
    CHECK(m.precision == 0.0);
    CHECK(m.recall == 0.0);
    CHECK(m.f1 == 0.0);
  }
  SUBCASE("diagonal exclusion") {
    DenseMatrix est = DenseMatrix::Identity(3, 3);
    DenseMatrix t = DenseMatrix::Identity(3, 3);
    const SupportMetrics m = support_f1(est, t, 1e-4, /*skip_diagonal=*/true);
    CHECK(m.nnz_estimated == 0);
    CHECK(m.nnz_true == 0);
    CHECK(m.f1 == 1.0);
  }
  SUBCASE("symmetric under simultaneous permutation") {
    Rng rng(83);
    DenseMatrix est = random_matrix(4, 4, rng);
    DenseMatrix t = random_matrix(4, 4, rng);
    const SupportMetrics before = support_f1(est, t, 1e-3);
    std::vector<Index> perm = {2, 0, 3, 1};
    DenseMatrix ep(4, 4), tp(4, 4);
    for (Index i = 0; i < 4; ++i) {
      for (Index j = 0; j < 4; ++j) {
        ep(i, j) = est(perm[i], perm[j]);
        tp(i, j) = t(perm[i], perm[j]);
      }
    }
    const SupportMetrics after = support_f1(ep, tp, 1e-3);
    CHECK(before.f1 == after.f1);
    CHECK(before.precision == after.precision);
  }
  SUBCASE("F1 vanishes once the threshold passes the largest true positive") {
    // Shared (true-positive) entries at relative magnitude 0.5; each matrix
    // keeps its own maximum elsewhere, so supports stay non-empty while the
    // true positives drop out.
    DenseMatrix est = DenseMatrix::Zero(3, 3);
    DenseMatrix t = DenseMatrix::Zero(3, 3);
    est(0, 0) = 1.0;
    t(1, 1) = 1.0;
    est(2, 2) = t(2, 2) = 0.5;
    est(0, 2) = t(0, 2) = 0.4;
    double prev = 2.0;
    for (double thr : {0.3, 0.45, 0.6, 0.8}) {
      const double f1 = support_f1(est, t, thr).f1;
      if (thr > 0.5) CHECK(f1 == 0.0);  // all true positives below threshold
      CHECK(f1 <= prev + 1e-12);
      prev = f1;
    }
  }
  SUBCASE("shape mismatch is rejected") {
    CHECK_THROWS_AS(
        support_f1(DenseMatrix::Zero(2, 2), DenseMatrix::Zero(3, 2), 1e-4),
        ShapeMismatch);
  }
}

TEST_CASE("regression_error") {
  Rng rng(85);
  Dataset test = random_dataset(10, 4, 3, rng);
  SUBCASE("exact coefficients on noiseless data") {
    DenseMatrix B = random_matrix(4, 3, rng);
    Dataset noiseless;
    noiseless.X = test.X;
    noiseless.Y = test.X * B;
    CHECK(regression_error(noiseless, B) == doctest::Approx(0.0));
  }
  SUBCASE("zero coefficients leave |Y|^2 / n") {
    CHECK(regression_error(test, DenseMatrix::Zero(4, 3)) ==
          doctest::Approx(test.Y.squaredNorm() / 10.0));
  }
  SUBCASE("matches the double-loop recomputation") {
    DenseMatrix B = random_matrix(4, 3, rng);
    double total = 0.0;
    for (Index i = 0; i < 10; ++i) {
      for (Index k = 0; k < 3; ++k) {
        double pred = 0.0;
        for (Index j = 0; j < 4; ++j) pred += test.X(i, j) * B(j, k);
        const double r = test.Y(i, k) - pred;
        total += r * r;
      }
    }
    CHECK(regression_error(test, B) == doctest::Approx(total / 10.0));
  }
  SUBCASE("wrongly shaped coefficients are rejected") {
    CHECK_THROWS_AS(regression_error(test, DenseMatrix::Zero(3, 3)),
                    ShapeMismatch);
  }
}

TEST_CASE("holdout_split") {
  Rng rng(86);
  SUBCASE("480-of-632 fraction") {
    Dataset d = random_dataset(632, 2, 2, rng);
    const auto [train, test] = holdout_split(d, 480.0 / 632.0, 1);
    CHECK(train.n() == 480);
    CHECK(test.n() == 152);
  }
  SUBCASE("half of ten") {
    Dataset d = random_dataset(10, 2, 2, rng);
    const auto [train, test] = holdout_split(d, 0.5, 2);
    CHECK(train.n() == 5);
    CHECK(test.n() == 5);
  }
  SUBCASE("determinism and row preservation") {
    Dataset d = random_dataset(20, 3, 2, rng);
    const auto [a_train, a_test] = holdout_split(d, 0.7, 3);
    const auto [b_train, b_test] = holdout_split(d, 0.7, 3);
    CHECK((a_train.X - b_train.X).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a_test.Y - b_test.Y).cwiseAbs().maxCoeff() == 0.0);
    // every train row appears verbatim in the original
    for (Index r = 0; r < a_train.n(); ++r) {
      bool found = false;
      for (Index i = 0; i < d.n(); ++i) {
        if ((a_train.X.row(r) - d.X.row(i)).cwiseAbs().maxCoeff() == 0.0) {
          found = true;
          break;
        }
      }
      CHECK(found);
    }
  }
  SUBCASE("degenerate fractions are rejected") {
    Dataset d = random_dataset(10, 2, 2, rng);
    CHECK_THROWS_AS(holdout_split(d, 0.001, 1), DegenerateSplit);
    CHECK_THROWS_AS(holdout_split(d, 0.999, 1), DegenerateSplit);
  }
}

TEST_CASE("grid_sweep basics") {
  const SimulationConfig cfg = SimulationConfig::from_case(1, 60, 10, 6, 3, 3, 21);
  const SimulationTruth truth = make_truth(cfg);
  const Dataset d = sample_dataset(truth, cfg);

  SUBCASE("single point sweep") {
    GridSpec grid;
    grid.lambda1s = {0.1};
    SweepOptions opts;
    opts.model = "l12glasso";
    opts.seed = 5;
    const SweepReport r = grid_sweep(d, grid, opts);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].ok);
    CHECK(r.best_index == 0);
    CHECK(r.rows[0].tau == doctest::Approx(0.01));
  }
  SUBCASE("argmin picks the smaller validation error") {
    GridSpec grid;
    grid.lambda1s = {0.05, 5.0};  // the huge penalty zeroes B out
    grid.gammas = {0.02};
    SweepOptions opts;
    opts.model = "lasso";
    opts.seed = 5;
    const SweepReport r = grid_sweep(d, grid, opts);
    REQUIRE(r.rows.size() == 2);
    REQUIRE(r.rows[0].ok);
    REQUIRE(r.rows[1].ok);
    CHECK(r.rows[0].val_error < r.rows[1].val_error);
    CHECK(r.best_index == 0);
  }
  SUBCASE("truth enables F1 columns") {
    GridSpec grid;
    SweepOptions opts;
    opts.model = "l12glasso";
    opts.seed = 5;
    opts.B_true = truth.B_true;
    opts.Theta_true = truth.Theta_true.matrix();
    const SweepReport r = grid_sweep(d, grid, opts);
    REQUIRE(r.rows.size() == 1);
    REQUIRE(r.rows[0].f1_b.has_value());
    REQUIRE(r.rows[0].f1_theta.has_value());
    CHECK(r.rows[0].f1_b->f1 >= 0.0);
  }
  SUBCASE("parallel jobs produce the identical report") {
    GridSpec grid;
    grid.lambda1s = {0.05, 0.1, 0.2};
    grid.gammas = {0.0, 0.05};
    SweepOptions serial;
    serial.model = "l12glasso";
    serial.seed = 7;
    SweepOptions parallel = serial;
    parallel.jobs = 3;
    const SweepReport a = grid_sweep(d, grid, serial);
    const SweepReport b = grid_sweep(d, grid, parallel);
    REQUIRE(a.rows.size() == b.rows.size());
    CHECK(a.best_index == b.best_index);
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      CHECK(a.rows[i].val_error == b.rows[i].val_error);
      CHECK(a.rows[i].nnz_b == b.rows[i].nnz_b);
    }
  }
  SUBCASE("per-point failures are collected, not fatal") {
    GridSpec grid;
    grid.lambda1s = {0.1};
    SweepOptions opts;
    opts.model = "l12glasso";
    opts.seed = 5;
    opts.B_true = DenseMatrix::Zero(2, 2);  // wrong shape -> ShapeMismatch
    const SweepReport r = grid_sweep(d, grid, opts);
    REQUIRE(r.rows.size() == 1);
    CHECK_FALSE(r.rows[0].ok);
    CHECK(r.best_index == -1);
    CHECK_FALSE(r.rows[0].error.empty());
  }
  SUBCASE("argmin ties break toward the first grid point") {
    GridSpec grid;
    grid.lambda1s = {0.1, 0.1, 0.1};  // identical points, identical errors
    SweepOptions opts;
    opts.model = "lasso";
    opts.seed = 5;
    const SweepReport r = grid_sweep(d, grid, opts);
    REQUIRE(r.rows.size() == 3);
    CHECK(r.rows[0].val_error == r.rows[2].val_error);
    CHECK(r.best_index == 0);
  }
  SUBCASE("unknown model is a usage error") {
    GridSpec grid;
    SweepOptions opts;
    opts.model = "boost";
    CHECK_THROWS_AS(grid_sweep(d, grid, opts), UsageError);
  }
}
