// spectra.hpp -- eigensolvers and gap extraction with ground-space deflation.
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "momentgap/common.hpp"
#include "momentgap/operators.hpp"

namespace momentgap {

struct GapResult {
  double gap = 0.0;
  Eigen::Index groundDim = 0;
  std::string method;  // "dense" or "lanczos"
  double residual = 0.0;
  int iterations = 0;
  std::uint64_t seed = 0;
};

// Applies op to every basis vector. Guard: dim <= 2^13.
Eigen::MatrixXd materialize(const LinearOperator& op);

// All eigenvalues, ascending. Guard: dim <= 4096.
Eigen::VectorXd dense_spectrum(const LinearOperator& op);

struct GapOptions {
  double tol = 1e-8;
  int maxIter = 5000;
  std::uint64_t seed = kDefaultSeed;
  Eigen::Index denseLimit = 4096;
};

// Smallest eigenvalue of op + penalty * sum_i |g_i><g_i| where the columns of
// `ground` are orthonormal and annihilated by op within tol. The penalty must
// exceed the operator norm (|E| + 1 works for a moment Hamiltonian). Dense
// below denseLimit, restarted Lanczos with full reorthogonalization above.
GapResult spectral_gap(const LinearOperator& op, const Eigen::MatrixXd& ground,
                       double penalty, const GapOptions& opts = {});

}  // namespace momentgap
