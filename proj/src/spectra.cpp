// spectra.cpp -- dense and restarted-Lanczos gap solvers.
#include "momentgap/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace momentgap {

Eigen::MatrixXd materialize(const LinearOperator& op) {
  if (op.dim > (Eigen::Index(1) << 13))
    throw GuardError("materialize limited to dimension 2^13, got " +
                     std::to_string(op.dim));
  Eigen::MatrixXd m(op.dim, op.dim);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(op.dim);
  Eigen::VectorXd y(op.dim);
  for (Eigen::Index j = 0; j < op.dim; ++j) {
    e[j] = 1.0;
    op.matvec(e, y);
    m.col(j) = y;
    e[j] = 0.0;
  }
  return m;
}

Eigen::VectorXd dense_spectrum(const LinearOperator& op) {
  if (op.dim > 4096)
    throw GuardError("dense spectrum limited to dimension 4096, got " +
                     std::to_string(op.dim));
  Eigen::MatrixXd m = materialize(op);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m,
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

namespace {

void check_ground(const LinearOperator& op, const Eigen::MatrixXd& ground,
                  double tol) {
  if (ground.cols() == 0) return;
  if (ground.rows() != op.dim)
    throw ValidationError("ground vectors do not match the operator dimension");
  if (ground.cols() >= op.dim)
    throw ValidationError("ground set spans the whole space; no gap exists");
  Eigen::MatrixXd overlap = ground.transpose() * ground;
  overlap.diagonal().array() -= 1.0;
  if (overlap.cwiseAbs().maxCoeff() > 1e-8)
    throw ValidationError("ground vectors are not orthonormal");
  Eigen::VectorXd y(op.dim);
  for (Eigen::Index j = 0; j < ground.cols(); ++j) {
    op.matvec(ground.col(j), y);
    double r = y.norm();
    if (r > std::max(tol, 1e-10))
      throw ValidationError("ground vector " + std::to_string(j) +
                            " is not annihilated by the operator, residual " +
                            format_double(r));
  }
}

}  // namespace

GapResult spectral_gap(const LinearOperator& op, const Eigen::MatrixXd& ground,
                       double penalty, const GapOptions& opts) {
  if (penalty <= 0.0)
    throw ValidationError("deflation penalty must be positive");
  check_ground(op, ground, opts.tol);

  GapResult out;
  out.groundDim = ground.cols();
  out.seed = opts.seed;

  if (op.dim <= opts.denseLimit) {
    Eigen::MatrixXd m = materialize(op);
    if (ground.cols() > 0) m.noalias() += penalty * ground * ground.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    double lambda = es.eigenvalues()[0];
    Eigen::VectorXd v = es.eigenvectors().col(0);
    out.gap = std::max(lambda, 0.0);
    out.residual = (m.selfadjointView<Eigen::Lower>() * v - lambda * v).norm();
    out.method = "dense";
    out.iterations = 0;
    return out;
  }

  // Restarted Lanczos for the largest eigenvalue of B = s I - A, where
  // A = op + penalty * G G^T and s = 2 * penalty >= |A|.
  const Eigen::Index dim = op.dim;
  const double s = 2.0 * penalty;
  auto applyB = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    op.matvec(x, y);
    if (ground.cols() > 0)
      y.noalias() += penalty * (ground * (ground.transpose() * x));
    y = s * x - y;
  };

  Eigen::Index maxBasis = static_cast<Eigen::Index>(1.5e9 / (8.0 * double(dim)));
  maxBasis = std::clamp<Eigen::Index>(maxBasis, 24, 240);
  maxBasis = std::min(maxBasis, dim);

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v0(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v0[i] = gauss(rng);
  v0.normalize();

  Eigen::MatrixXd basis(dim, maxBasis);
  Eigen::VectorXd alpha(maxBasis), beta(maxBasis), w(dim);
  int iterations = 0;
  double prevEst = 0.0;
  int stable = 0;
  bool haveryPrev = false;
  double bestGap = 0.0, bestResidual = std::numeric_limits<double>::infinity();

  for (;;) {
    basis.col(0) = v0;
    Eigen::Index m = 0;
    for (Eigen::Index j = 0; j < maxBasis; ++j) {
      applyB(basis.col(j), w);
      ++iterations;
      alpha[j] = basis.col(j).dot(w);
      w -= alpha[j] * basis.col(j);
      if (j > 0) w -= beta[j - 1] * basis.col(j - 1);
      for (int pass = 0; pass < 2; ++pass)
        for (Eigen::Index i = 0; i <= j; ++i)
          w -= basis.col(i).dot(w) * basis.col(i);
      m = j + 1;
      if (iterations >= opts.maxIter) break;
      if (j + 1 == maxBasis) break;
      beta[j] = w.norm();
      if (beta[j] <= 1e-13 * s) break;  // invariant subspace found
      basis.col(j + 1) = w / beta[j];
    }

    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
      t(j, j) = alpha[j];
      if (j + 1 < m) {
        t(j + 1, j) = beta[j];
        t(j, j + 1) = beta[j];
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    double theta = es.eigenvalues()[m - 1];
    Eigen::VectorXd ritz = basis.leftCols(m) * es.eigenvectors().col(m - 1);
    ritz.normalize();
    applyB(ritz, w);
    ++iterations;
    double residual = (w - theta * ritz).norm();
    double gapEst = s - theta;
    if (residual < bestResidual) {
      bestResidual = residual;
      bestGap = gapEst;
    }

    if (haveryPrev && std::abs(gapEst - prevEst) <
                          opts.tol * std::max(1.0, std::abs(gapEst)))
      ++stable;
    else
      stable = 0;
    prevEst = gapEst;
    haveryPrev = true;

    if (stable >= 3 && residual <= opts.tol) {
      out.gap = std::max(gapEst, 0.0);
      out.residual = residual;
      out.method = "lanczos";
      out.iterations = iterations;
      return out;
    }
    if (iterations >= opts.maxIter)
      throw ConvergenceError(
          "spectral gap did not converge in " + std::to_string(opts.maxIter) +
          " iterations; best estimate " + format_double(bestGap) +
          " with residual " + format_double(bestResidual));
    v0 = ritz;
  }
}

}  // namespace momentgap
