// permsym.hpp -- symmetric group bookkeeping, permutation Gram and Weingarten
// matrices, vectorized permutation states, and the two-site Haar projector.
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "momentgap/common.hpp"

namespace momentgap {

using Perm = std::vector<int>;

// Permutations of {0..k-1} in lexicographic order; identity first.
std::vector<Perm> symmetric_group(int k);
Perm perm_compose(const Perm& a, const Perm& b);  // (a o b)(i) = a[b[i]]
Perm perm_inverse(const Perm& p);
int cycle_count(const Perm& p);

// Gram matrix G[s][t] = d^{#cycles(s t^{-1})} over S_k; k <= 5, d >= 2.
Eigen::MatrixXd gram_matrix(int k, double d);

// Moore-Penrose pseudo-inverse of a symmetric PSD matrix; eigenvalues below
// cutoffRel * lambda_max are treated as zero.
Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& m,
                               double cutoffRel = 1e-10);

// Weingarten matrix: pseudo-inverse of gram_matrix(k, d).
Eigen::MatrixXd weingarten(int k, double d);

// Numerical rank of gram_matrix(k, d) at the pseudo-inverse cutoff.
int gram_rank(int k, double d);

// Single-site vectorized permutation state |sigma> on (C^q)^{2k}: legs are
// (fwd_1..fwd_k, conj_1..conj_k), first leg most significant. Entry at
// (f, c) is 1 iff f_{sigma(t)} = c_t for all t. Returns the positions of the
// ones, ascending; the vector has q^k ones out of q^{2k} entries.
std::vector<Eigen::Index> perm_vector_support(const Perm& sigma, int q);
Eigen::VectorXd perm_vector(const Perm& sigma, int q);

// Two-site Haar moment projector P = sum_{s,t} Wg[s][t] |s><t| where |s> is
// the two-site permutation state kron(|s>_site, |s>_site) and Wg is taken at
// d = q^2. Stored in factored form (Weingarten matrix + 0/1 supports); the
// dense matrix is materialized only when the two-site dimension q^{4k} is at
// most denseLimit.
struct HaarProjector {
  int k = 0;
  int q = 0;
  Eigen::Index siteDim = 0;  // q^{2k}
  Eigen::Index dim = 0;      // q^{4k}
  Eigen::MatrixXd wg;        // k! x k!
  std::vector<std::vector<Eigen::Index>> support;  // per sigma, sorted
  Eigen::MatrixXd dense;     // dim x dim when materialized, else 0 x 0

  bool hasDense() const { return dense.size() > 0; }
  // y = P x; y may not alias x.
  void apply(const Eigen::Ref<const Eigen::VectorXd>& x,
             Eigen::Ref<Eigen::VectorXd> y) const;
  // c[t] = <t|x> summed over the 0/1 support of each permutation state.
  Eigen::VectorXd overlaps(const Eigen::Ref<const Eigen::VectorXd>& x) const;
  double trace() const;  // equals the rank of gram_matrix(k, q^2)
};

// Guard: q^{4k} <= 2^16. The dense matrix is skipped by default; pass a
// positive denseLimit to materialize it for dimensions up to that size.
HaarProjector haar_projector(int k, int q, Eigen::Index denseLimit = 0);

// Independent construction: orthonormalize the k! two-site permutation states
// by modified Gram-Schmidt and return Q Q^T. Dense; guarded by q^{4k} <= 2^13.
Eigen::MatrixXd haar_projector_oracle(int k, int q);

// Coefficient-space Gram-Schmidt: returns R with columns expressing an
// orthonormal ground basis as combinations of permutation states, so that
// Q Q^T = B (R R^T) B^T. Works at any k <= 5 without dense storage.
Eigen::MatrixXd haar_oracle_coefficients(int k, double d);

// Monte Carlo check: averages U^{x k} (x) conj(U)^{x k} over `samples` Haar
// unitaries on C^{q^2} (two-site gate), reordered to the site-major leg
// convention. Returns the complex average; seed-fixed.
Eigen::MatrixXcd haar_projector_monte_carlo(int k, int q, int samples,
                                            std::uint64_t seed);

// Exact max-entry of B A B^T - that is, of sum_{s,t} A[s][t] |s><t| - where
// B is the 0/1 support matrix of the projector's permutation states.
double support_quadratic_max_entry(const HaarProjector& p,
                                   const Eigen::MatrixXd& a);

// Orthonormal basis (columns) of span{ |sigma>^{x n} } in the full
// q^{2nk}-dimensional space; dimension = rank of gram_matrix(k, q^n).
// Guard: q^{2nk} <= 2^22.
Eigen::MatrixXd ground_state_basis(int n, int k, int q);

}  // namespace momentgap
