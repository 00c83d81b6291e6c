// effective.hpp -- symmetry-projected Hamiltonians: the k=2 two-level site
// model, the general-k orthonormal-site-basis model, and the star-graph spin
// form used as an independent cross-check.
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "momentgap/graph.hpp"
#include "momentgap/operators.hpp"
#include "momentgap/spectra.hpp"

namespace momentgap {

struct EffectiveModel {
  int k = 0;
  int q = 0;
  Eigen::Index perSiteDim = 0;
  // |sigma>_site = sum_a siteCoeff(a, sigma) |a> in the orthonormal site basis.
  Eigen::MatrixXd siteCoeff;  // perSiteDim x k!
  // Two-site image of (I - P_haar); eigenvalues in [0, 1].
  Eigen::MatrixXd localTerm;  // perSiteDim^2 x perSiteDim^2
};

// Per-site basis {vec(P+)/sqrt(tr P+), vec(P-)/sqrt(tr P-)}; perSiteDim 2.
EffectiveModel build_k2_model(int q);

// Per-site basis spanning the k! site permutation vectors: eigenvectors of
// the per-site Gram matrix above the 1e-10 relative cutoff, scaled to unit
// Gram norm, so perSiteDim equals the Gram rank. 2 <= k <= 4.
EffectiveModel build_qr_model(int k, int q);

// H_eff = sum_e localTerm_e on perSiteDim^n dimensions. Guard: dim <= 2^24.
LinearOperator assemble_effective(const Graph& g, const EffectiveModel& model);

// Orthonormal zero-energy basis on n sites; rank of Gram(k, q^n) columns.
Eigen::MatrixXd effective_ground_basis(int n, const EffectiveModel& model);

// Star-graph k=2 Hamiltonian in spin form on 2^n with site 0 the center:
// H = (n-1)/2 - ((n-1)q/(2(q^2+1))) sz0 - (q/(q^2+1)) Sz
//     - (q^2/(q^2+1)) sx0 Sx - (1/(q^2+1)) sy0 Sy,  S_a = (1/2) sum_{i>=1} sa_i.
// Dense output. Guard: n <= 12.
Eigen::MatrixXd star_spin_hamiltonian(int n, int q);

enum class Representation { Auto, Full, EffectiveK2, EffectiveQR };

struct ComputeGapOptions {
  double tol = 1e-8;
  int maxIter = 5000;
  std::uint64_t seed = kDefaultSeed;
  Eigen::Index denseLimit = 4096;
  double penalty = 0.0;  // 0 picks |E| + 1
};

struct ComputeGapOutcome {
  GapResult result;
  std::string representation;  // "full", "effective-k2", "effective-qr"
  Eigen::Index dim = 0;
};

// Builds the requested representation (Auto: k=2 -> effective-k2, k in {3,4}
// -> effective-qr, k=1 -> full), deflates the ground space, runs the solver.
ComputeGapOutcome compute_gap(const Graph& g, int k, int q,
                              Representation rep = Representation::Auto,
                              const ComputeGapOptions& opts = {});

// Dimension of the representation Auto dispatch would use for n sites, or -1
// when no representation fits the hard guards (2^22 full, 2^24 effective).
long long representation_dim(int n, int k, int q);

}  // namespace momentgap
