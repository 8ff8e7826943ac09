#include "l12glasso/matrix.hpp"

#include <cmath>
#include <string>

namespace l12 {

namespace {

void check_spd_input(const DenseMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw DimensionMismatch("SpdMatrix: matrix must be square and non-empty");
  }
  if (!m.allFinite()) {
    throw NotPositiveDefinite("SpdMatrix: entries must be finite");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10 * scale) {
    throw NotPositiveDefinite("SpdMatrix: matrix is not symmetric (|A - A^T| = " +
                              std::to_string(asym) + ")");
  }
}

}  // namespace

SpdMatrix::SpdMatrix(DenseMatrix m) : m_(std::move(m)) {
  check_spd_input(m_);
  m_ = ((m_ + m_.transpose()) * 0.5).eval();
  Eigen::LLT<DenseMatrix> llt(m_);
  if (llt.info() != Eigen::Success) {
    throw FactorizationFailed("SpdMatrix: Cholesky factorization failed");
  }
}

SpdMatrix SpdMatrix::identity(Index dim) {
  return SpdMatrix(DenseMatrix::Identity(dim, dim), Unchecked{});
}

Eigen::LLT<DenseMatrix> SpdMatrix::llt() const {
  Eigen::LLT<DenseMatrix> llt(m_);
  if (llt.info() != Eigen::Success) {
    throw FactorizationFailed("SpdMatrix: Cholesky factorization failed");
  }
  return llt;
}

DenseMatrix SpdMatrix::inverse() const {
  return llt().solve(DenseMatrix::Identity(dim(), dim()));
}

double soft_threshold(double z, double w) {
  const double mag = std::abs(z) - w;
  return mag > 0.0 ? std::copysign(mag, z) : 0.0;
}

double asym_soft_threshold(double z, double up, double low) {
  if (z > up) return z - up;
  if (z < -low) return z + low;
  return 0.0;
}

std::pair<double, double> fusion_prox_pair(double z_a, double z_b, int s,
                                           double w) {
  const double sd = s >= 0 ? 1.0 : -1.0;
  const double t = z_a + sd * z_b;
  if (std::abs(t) > 2.0 * w) {
    // Interior of the |a + s*b| kink: both coordinates shrink by w along
    // the penalized direction (1, s), KKT of the pairwise problem.
    const double shift = std::copysign(w, t);
    return {z_a - shift, z_b - sd * shift};
  }
  // Otherwise the minimizer sits on a + s*b = 0; project onto that line.
  const double mu = t / 2.0;
  return {z_a - mu, z_b - sd * mu};
}

double log_det_pd(const DenseMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("log_det_pd: matrix must be square");
  }
  Eigen::LLT<DenseMatrix> llt(m);
  if (llt.info() != Eigen::Success) {
    throw FactorizationFailed("log_det_pd: input left the PD cone");
  }
  return 2.0 * llt.matrixLLT().diagonal().array().log().sum();
}

double log_det_pd(const SpdMatrix& m) { return log_det_pd(m.matrix()); }

SpdMatrix ar1_covariance(Index dim, double rho) {
  if (dim < 1) throw DimensionMismatch("ar1_covariance: dim must be >= 1");
  if (!(std::abs(rho) < 1.0)) {
    throw InvalidRho("ar1_covariance: |rho| must be < 1");
  }
  DenseMatrix m(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    for (Index k = 0; k < dim; ++k) {
      m(j, k) = std::pow(rho, std::abs(static_cast<double>(j - k)));
    }
  }
  return SpdMatrix(std::move(m));
}

}  // namespace l12
