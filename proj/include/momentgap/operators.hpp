// operators.hpp -- matrix-free moment Hamiltonians on graphs, detectability
// products, site permutation unitaries, and the compression identities.
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "momentgap/graph.hpp"
#include "momentgap/permsym.hpp"

namespace momentgap {

struct LinearOperator {
  Eigen::Index dim = 0;
  std::string description;
  std::function<void(const Eigen::Ref<const Eigen::VectorXd>&,
                     Eigen::Ref<Eigen::VectorXd>)>
      matvecFn;

  void matvec(const Eigen::Ref<const Eigen::VectorXd>& x,
              Eigen::Ref<Eigen::VectorXd> y) const {
    matvecFn(x, y);
  }
  Eigen::VectorXd apply(const Eigen::Ref<const Eigen::VectorXd>& x) const {
    Eigen::VectorXd y(dim);
    matvecFn(x, y);
    return y;
  }
};

struct HamiltonianSpec {
  Graph graph;
  int k = 2;
  int q = 2;
};

// H = |E| I - sum_e P_e on the full q^{2nk}-dimensional doubled space, edges
// applied in ascending lexicographic order. Guard: q^{2nk} <= 2^22.
LinearOperator assemble_full(const HamiltonianSpec& spec);

// M = sum_e P_e = |E| I - H. Same guard as assemble_full.
LinearOperator moment_operator(const HamiltonianSpec& spec);

// Unitary relabeling of sites: the content of site s moves to site dest[s],
// acting on all 2k copies per site. dest must be a permutation of 0..n-1.
LinearOperator site_permutation_operator(int n, Eigen::Index siteDim,
                                         const std::vector<int>& dest);

// Cyclic permutation over the sites listed in `path`: each listed vertex's
// content moves one position toward the back and the last listed vertex's
// content wraps around to the first. Other sites are untouched. This is the
// orientation that turns a sequential path product of pair projectors into
// the star product centered on the first listed vertex.
LinearOperator cyclic_permutation(const std::vector<int>& path, int n,
                                  Eigen::Index siteDim);

// Detectability product: factors P_e for e in `ordering`, applied right to
// left (last listed edge acts first). `ordering` must be a permutation of the
// graph's edge set. Guard: q^{2nk} <= 2^26.
LinearOperator dl_operator(const HamiltonianSpec& spec,
                           const std::vector<std::pair<int, int>>& ordering);

// Removes the component of x inside span{ |sigma>^{x n} } without
// materializing the basis (coefficient algebra over the permutation states).
void project_out_ground(Eigen::Ref<Eigen::VectorXd> x, int n, int k, int q);

// Max non-commuting count: the largest number of other edges sharing a vertex
// with any single edge.
int dl_g_parameter(const Graph& g);

enum class CompressionLemma {
  PathToStar,       // m_{12} m_{23} ... = m_{12} m_{13} ... W_P
  StarToPathRight,  // m_{01} m_{02} ... = m_{01} m_{12} ... W_P^dagger
  StarToPathLeft,   // m_{01} m_{02} ... = W_P^dagger m_{12} ... m_{0,L-1}
};

struct IdentityCheckResult {
  double deviation = 0.0;
  std::string method;  // "dense-columns" or "sampled-columns+power-iteration"
  Eigen::Index dim = 0;
};

// Checks one compression identity on a pathLen-site register at (k, q).
// Exact column sweep up to 2^13; sampled columns plus a power-iteration
// largest-singular-value estimate above that. Guard: q^{2 k pathLen} <= 2^20.
IdentityCheckResult verify_compression_identity(CompressionLemma which,
                                                int pathLen, int k, int q,
                                                std::uint64_t seed = kDefaultSeed);

// DL orderings and cyclic unitaries that relate the detectability product on
// a spanning tree to the one on its compressed tree: DL^{ST} equals
// DL^{CST} composed after all the listed cyclic permutations.
struct CompressionDlPair {
  std::vector<std::pair<int, int>> stOrdering;
  std::vector<std::pair<int, int>> cstOrdering;
  std::vector<std::vector<int>> cyclicPaths;  // each: head followed by tail
};
CompressionDlPair compression_dl_pair(const RootedTree& st,
                                      const CompressedTree& ct);

// Pi_odd * Pi_others * Pi_even edge ordering for the current lowest layer of
// a compressed tree; within each star block the along-layer edge comes last.
std::vector<std::pair<int, int>> layer_pipeline_ordering(
    const CompressedTree& ct);

struct DlCheckResult {
  double maxNormSq = 0.0;
  double minNormSq = 0.0;
  double dlBound = 0.0;   // 1 / (1 + gap/g^2); 0 when every factor commutes
  double qubBound = 0.0;  // 1 - 4 gap
  int gParam = 0;
  bool dlHolds = false;
  bool qubHolds = false;
};

// Samples normalized excited states (seed-fixed) and checks the detectability
// and union-bound inequalities for the given ordering and known gap.
DlCheckResult dl_qub_check(const HamiltonianSpec& spec,
                           const std::vector<std::pair<int, int>>& ordering,
                           double gap, int samples, std::uint64_t seed);

}  // namespace momentgap
