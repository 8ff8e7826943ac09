#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "l12glasso/objective.hpp"
#include "l12glasso/rng.hpp"
#include "test_util.hpp"

using namespace l12;
using testutil::random_dataset;
using testutil::random_matrix;
using testutil::random_spd;

namespace {

// Scalar, loop-by-loop recomputations kept deliberately independent of the
// Eigen expressions in the implementation.
double naive_g12(const Dataset& d, const DenseMatrix& B, const Hyperparams& hp) {
  double fit = 0.0;
  for (Index i = 0; i < d.n(); ++i) {
    for (Index k = 0; k < d.q(); ++k) {
      double pred = 0.0;
      for (Index j = 0; j < d.p(); ++j) pred += d.X(i, j) * B(j, k);
      const double r = d.Y(i, k) - pred;
      fit += r * r;
    }
  }
  fit /= static_cast<double>(d.n());
  double l1 = 0.0;
  for (Index j = 0; j < d.p(); ++j) {
    for (Index k = 0; k < d.q(); ++k) l1 += std::abs(B(j, k));
  }
  double l21 = 0.0;
  for (Index j = 0; j < d.p(); ++j) {
    double s = 0.0;
    for (Index k = 0; k < d.q(); ++k) s += B(j, k) * B(j, k);
    l21 += std::sqrt(s);
  }
  return fit + hp.lambda1 * l1 - hp.tau * l21;
}

double naive_h(const Dataset& d, const SpdMatrix& theta, const Hyperparams& hp) {
  double tr = 0.0;
  for (Index a = 0; a < d.q(); ++a) {
    for (Index b = 0; b < d.q(); ++b) {
      double s_ab = 0.0;
      for (Index i = 0; i < d.n(); ++i) s_ab += d.Y(i, a) * d.Y(i, b);
      tr += s_ab / static_cast<double>(d.n()) * theta(b, a);
    }
  }
  double l1 = 0.0;
  for (Index a = 0; a < d.q(); ++a) {
    for (Index b = 0; b < d.q(); ++b) l1 += std::abs(theta(a, b));
  }
  return tr - log_det_pd(theta) + hp.lambda2 * l1;
}

double naive_gfl(const DenseMatrix& B, const DenseMatrix& theta) {
  double total = 0.0;
  for (Index k = 0; k < theta.rows(); ++k) {
    for (Index m = 0; m < theta.rows(); ++m) {
      if (k == m || theta(k, m) == 0.0) continue;
      const double sgn = theta(k, m) > 0 ? 1.0 : -1.0;
      double fused = 0.0;
      for (Index j = 0; j < B.rows(); ++j) {
        fused += std::abs(B(j, k) + sgn * B(j, m));
      }
      total += std::abs(theta(k, m)) * fused;
    }
  }
  return total;
}

}  // namespace

TEST_CASE("eval_g12 trivial examples") {
  Hyperparams hp;
  hp.lambda1 = 0.0;
  hp.tau = 0.0;
  Rng rng(1);
  Dataset d;
  d.X = random_matrix(4, 3, rng);
  d.Y = DenseMatrix::Ones(4, 2);
  CHECK(eval_g12(d, DenseMatrix::Zero(3, 2), hp) ==
        doctest::Approx(d.Y.squaredNorm() / 4.0));

  // X = Y = 0, single entry B = 2, lambda1 = 1, tau = 0.5
  Dataset zero;
  zero.X = DenseMatrix::Zero(2, 1);
  zero.Y = DenseMatrix::Zero(2, 1);
  Hyperparams hp2;
  hp2.lambda1 = 1.0;
  hp2.tau = 0.5;
  DenseMatrix b(1, 1);
  b << 2.0;
  CHECK(eval_g12(zero, b, hp2) == doctest::Approx(1.0));
}

TEST_CASE("eval_g12 matches the naive oracle") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Dataset d = random_dataset(5, 3, 4, rng);
    DenseMatrix B = random_matrix(3, 4, rng);
    Hyperparams hp;
    hp.lambda1 = rng.uniform(0.0, 1.0);
    hp.tau = rng.uniform(0.0, hp.lambda1);
    CHECK(eval_g12(d, B, hp) == doctest::Approx(naive_g12(d, B, hp)).epsilon(1e-12));
  }
}

TEST_CASE("eval_h trivial examples") {
  Dataset d;
  d.X = DenseMatrix::Zero(3, 1);
  d.Y = DenseMatrix::Zero(3, 2);
  Hyperparams hp;
  hp.lambda2 = 0.0;
  CHECK(eval_h(d, SpdMatrix::identity(2), hp) == doctest::Approx(0.0));

  hp.lambda2 = 1.0;
  DenseMatrix diag2 = 2.0 * DenseMatrix::Identity(2, 2);
  CHECK(eval_h(d, SpdMatrix(diag2), hp) ==
        doctest::Approx(-2.0 * std::log(2.0) + 4.0));
}

TEST_CASE("eval_h matches the naive oracle") {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    Dataset d = random_dataset(6, 2, 4, rng);
    SpdMatrix theta = random_spd(4, rng);
    Hyperparams hp;
    hp.lambda2 = rng.uniform(0.0, 1.0);
    CHECK(eval_h(d, theta, hp) == doctest::Approx(naive_h(d, theta, hp)).epsilon(1e-12));
  }
}

TEST_CASE("eval_gfl examples and oracle") {
  Rng rng(9);
  SUBCASE("diagonal theta gives zero") {
    DenseMatrix B = random_matrix(4, 3, rng);
    DenseMatrix diag = DenseMatrix::Identity(3, 3) * 2.0;
    CHECK(eval_gfl(B, SpdMatrix(diag)) == 0.0);
  }
  SUBCASE("fused columns cancel") {
    DenseMatrix B(3, 2);
    B.col(0) << 1.0, -2.0, 0.5;
    B.col(1) = -B.col(0);
    DenseMatrix theta(2, 2);
    theta << 1.0, 0.4, 0.4, 1.0;
    CHECK(eval_gfl(B, SpdMatrix(theta)) == doctest::Approx(0.0));
  }
  SUBCASE("random instances match the triple-loop oracle") {
    for (int trial = 0; trial < 20; ++trial) {
      DenseMatrix B = random_matrix(4, 3, rng);
      SpdMatrix theta = random_spd(3, rng);
      CHECK(eval_gfl(B, theta) ==
            doctest::Approx(naive_gfl(B, theta.matrix())).epsilon(1e-12));
    }
  }
}

TEST_CASE("eval_total composes the three parts") {
  Rng rng(10);
  Dataset d = random_dataset(6, 3, 4, rng);
  ModelEstimate est;
  est.B = random_matrix(3, 4, rng);
  est.Theta = random_spd(4, rng);
  Hyperparams hp;
  hp.lambda1 = 0.3;
  hp.lambda2 = 0.2;
  hp.tau = 0.1;

  hp.gamma = 0.0;
  CHECK(eval_total(d, est, hp) ==
        doctest::Approx(eval_g12(d, est.B, hp) + eval_h(d, est.Theta, hp)));

  hp.gamma = 0.7;
  CHECK(eval_total(d, est, hp) ==
        doctest::Approx(eval_g12(d, est.B, hp) + eval_h(d, est.Theta, hp) +
                        0.7 * eval_gfl(est.B, est.Theta)));

  SUBCASE("all-zero data with identity Theta and no penalties is 0") {
    Dataset zero;
    zero.X = DenseMatrix::Zero(2, 3);
    zero.Y = DenseMatrix::Zero(2, 4);
    ModelEstimate z;
    z.B = DenseMatrix::Zero(3, 4);
    z.Theta = SpdMatrix::identity(4);
    Hyperparams none;
    none.lambda1 = none.lambda2 = none.gamma = none.tau = 0.0;
    CHECK(eval_total(zero, z, none) == doctest::Approx(0.0));
  }
}

TEST_CASE("eval_total is invariant under simultaneous column permutation") {
  Rng rng(11);
  const Index q = 5;
  Dataset d = random_dataset(7, 3, q, rng);
  ModelEstimate est;
  est.B = random_matrix(3, q, rng);
  est.Theta = random_spd(q, rng);
  Hyperparams hp;
  hp.lambda1 = 0.2;
  hp.lambda2 = 0.15;
  hp.gamma = 0.4;
  hp.tau = 0.05;
  const double before = eval_total(d, est, hp);

  std::vector<Index> perm(q);
  std::iota(perm.begin(), perm.end(), Index{0});
  rng.shuffle(perm);

  Dataset dp = d;
  ModelEstimate ep;
  ep.B.resize(3, q);
  DenseMatrix tp(q, q);
  for (Index k = 0; k < q; ++k) {
    dp.Y.col(k) = d.Y.col(perm[k]);
    ep.B.col(k) = est.B.col(perm[k]);
    for (Index m = 0; m < q; ++m) tp(k, m) = est.Theta(perm[k], perm[m]);
  }
  ep.Theta = SpdMatrix(tp);
  CHECK(eval_total(dp, ep, hp) == doctest::Approx(before).epsilon(1e-12));
}

TEST_CASE("eval_g12 with tau = 0 is midpoint-convex in B") {
  Rng rng(12);
  Dataset d = random_dataset(6, 4, 3, rng);
  Hyperparams hp;
  hp.lambda1 = 0.4;
  hp.tau = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    DenseMatrix b1 = random_matrix(4, 3, rng);
    DenseMatrix b2 = random_matrix(4, 3, rng);
    const double mid = eval_g12(d, (b1 + b2) / 2.0, hp);
    const double avg = (eval_g12(d, b1, hp) + eval_g12(d, b2, hp)) / 2.0;
    CHECK(mid <= avg + 1e-10);
  }
}

TEST_CASE("eval_gfl is nonnegative") {
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    DenseMatrix B = random_matrix(4, 3, rng);
    SpdMatrix theta = random_spd(3, rng);
    CHECK(eval_gfl(B, theta) >= 0.0);
  }
}

TEST_CASE("Hyperparams validation") {
  Hyperparams hp;
  CHECK_NOTHROW(hp.validate());

  hp.tau = 0.2;
  hp.lambda1 = 0.1;
  CHECK_THROWS_AS(hp.validate(), InvalidHyperparams);

  hp.tau = 0.1;  // equality allowed (ratio = 1)
  CHECK_NOTHROW(hp.validate());

  hp.lambda1 = 0.0;
  hp.tau = 0.05;
  CHECK_THROWS_AS(hp.validate(), InvalidHyperparams);

  hp = Hyperparams{};
  hp.lambda2 = -0.1;
  CHECK_THROWS_AS(hp.validate(), InvalidHyperparams);
}

TEST_CASE("Dataset validation") {
  Dataset d;
  d.X = DenseMatrix::Zero(3, 2);
  d.Y = DenseMatrix::Zero(4, 2);
  CHECK_THROWS_AS(d.validate(), DimensionMismatch);
}

TEST_CASE("evaluators reject mismatched shapes") {
  Rng rng(14);
  Dataset d = random_dataset(5, 3, 4, rng);
  Hyperparams hp;
  CHECK_THROWS_AS(eval_g12(d, DenseMatrix::Zero(2, 4), hp), DimensionMismatch);
  CHECK_THROWS_AS(eval_h(d, SpdMatrix::identity(3), hp), DimensionMismatch);
  CHECK_THROWS_AS(eval_gfl(DenseMatrix::Zero(3, 2), SpdMatrix::identity(4)),
                  DimensionMismatch);
}
