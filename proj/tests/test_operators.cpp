#include <Eigen/Dense>
#include <random>

#include "doctest.h"
#include "momentgap/graph.hpp"
#include "momentgap/operators.hpp"
#include "momentgap/permsym.hpp"
#include "momentgap/spectra.hpp"

using namespace momentgap;

namespace {

Eigen::VectorXd product_perm_state(const Perm& sigma, int n, int q) {
  Eigen::VectorXd site = perm_vector(sigma, q);
  Eigen::VectorXd state = site;
  for (int i = 1; i < n; ++i) {
    Eigen::VectorXd next(state.size() * site.size());
    for (Eigen::Index a = 0; a < state.size(); ++a) {
      next.segment(a * site.size(), site.size()) = state(a) * site;
    }
    state = next;
  }
  return state;
}

}  // namespace

TEST_CASE("cyclic permutation shifts content toward the tail") {
  // Sites 0,1,2 with siteDim 2: W sends (a0,a1,a2) -> (a2,a0,a1).
  LinearOperator w = cyclic_permutation({0, 1, 2}, 3, 2);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(8);
  x(4) = 1.0;  // (1,0,0)
  Eigen::VectorXd y = w.apply(x);
  CHECK(y(2) == doctest::Approx(1.0));  // (0,1,0)
  // W^3 = identity on the cycled sites.
  Eigen::VectorXd r = Eigen::VectorXd::Random(8);
  CHECK((w.apply(w.apply(w.apply(r))) - r).lpNorm<Eigen::Infinity>() <=
        1e-14);
  // Unitarity.
  CHECK(w.apply(r).norm() == doctest::Approx(r.norm()).epsilon(1e-14));
}

TEST_CASE("cyclic permutation leaves unlisted sites alone") {
  LinearOperator w = cyclic_permutation({2, 0}, 3, 2);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(8);
  x(6) = 1.0;  // (1,1,0): site0=1, site1=1, site2=0
  Eigen::VectorXd y = w.apply(x);
  // Swap of sites 2 and 0: (0,1,1).
  CHECK(y(3) == doctest::Approx(1.0));
}

TEST_CASE("site permutation operator relabels sites") {
  LinearOperator s = site_permutation_operator(2, 3, {1, 0});
  Eigen::VectorXd x = Eigen::VectorXd::Zero(9);
  x(1 * 3 + 2) = 1.0;  // (1,2)
  Eigen::VectorXd y = s.apply(x);
  CHECK(y(2 * 3 + 1) == doctest::Approx(1.0));  // (2,1)
  Eigen::VectorXd r = Eigen::VectorXd::Random(9);
  CHECK((s.apply(s.apply(r)) - r).lpNorm<Eigen::Infinity>() <= 1e-14);
}

TEST_CASE("moment hamiltonian is hermitian, PSD, and kills product states") {
  HamiltonianSpec spec{star_graph(4), 2, 2};
  LinearOperator h = assemble_full(spec);
  REQUIRE(h.dim == 65536);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss;
  Eigen::VectorXd x(h.dim), y(h.dim);
  for (Eigen::Index i = 0; i < h.dim; ++i) {
    x(i) = gauss(rng);
    y(i) = gauss(rng);
  }
  Eigen::VectorXd hx = h.apply(x);
  CHECK(std::abs(y.dot(hx) - h.apply(y).dot(x)) <= 1e-9);
  CHECK(x.dot(hx) >= -1e-9);
  for (const Perm& sigma : symmetric_group(2)) {
    Eigen::VectorXd g = product_perm_state(sigma, 4, 2);
    CHECK(h.apply(g).lpNorm<Eigen::Infinity>() <= 1e-12);
  }
}

TEST_CASE("moment operator complements the hamiltonian") {
  HamiltonianSpec spec{path_graph(3), 2, 2};
  LinearOperator h = assemble_full(spec);
  LinearOperator m = moment_operator(spec);
  Eigen::VectorXd x = Eigen::VectorXd::Random(h.dim);
  CHECK((h.apply(x) + m.apply(x) - 2.0 * x).lpNorm<Eigen::Infinity>() <=
        1e-12);
}

TEST_CASE("ground projection removes every product permutation state") {
  const int n = 3, k = 2, q = 2;
  Eigen::MatrixXd basis = ground_state_basis(n, k, q);
  Eigen::VectorXd x = Eigen::VectorXd::Random(basis.rows());
  project_out_ground(x, n, k, q);
  CHECK((basis.transpose() * x).lpNorm<Eigen::Infinity>() <= 1e-10);
  // Idempotent.
  Eigen::VectorXd x2 = x;
  project_out_ground(x2, n, k, q);
  CHECK((x2 - x).lpNorm<Eigen::Infinity>() <= 1e-12);
}

TEST_CASE("detectability product fixes the ground space and contracts") {
  HamiltonianSpec spec{star_graph(3), 2, 2};
  LinearOperator dl = dl_operator(spec, spec.graph.sortedEdges());
  for (const Perm& sigma : symmetric_group(2)) {
    Eigen::VectorXd g = product_perm_state(sigma, 3, 2);
    CHECK((dl.apply(g) - g).lpNorm<Eigen::Infinity>() <= 1e-12);
  }
  Eigen::VectorXd x = Eigen::VectorXd::Random(dl.dim);
  CHECK(dl.apply(x).norm() <= x.norm() * (1.0 + 1e-12));
}

TEST_CASE("dl g parameter counts edges sharing a vertex") {
  CHECK(dl_g_parameter(path_graph(4)) == 2);
  CHECK(dl_g_parameter(star_graph(5)) == 3);
  CHECK(dl_g_parameter(complete_graph(4)) == 4);
  CHECK(dl_g_parameter(path_graph(2)) == 0);
}

TEST_CASE("compression identities hold exactly at small sizes") {
  // k=1 instances pin the cyclic orientation cheaply.
  for (auto which :
       {CompressionLemma::PathToStar, CompressionLemma::StarToPathRight,
        CompressionLemma::StarToPathLeft}) {
    IdentityCheckResult r3 = verify_compression_identity(which, 3, 1, 2);
    CHECK(r3.method == "dense-columns");
    CHECK(r3.deviation <= 1e-12);
    IdentityCheckResult r4 = verify_compression_identity(which, 4, 1, 2);
    CHECK(r4.deviation <= 1e-12);
  }
  // One k=2 instance per lemma (the rest run in the acceptance suite).
  for (auto which :
       {CompressionLemma::PathToStar, CompressionLemma::StarToPathRight,
        CompressionLemma::StarToPathLeft}) {
    IdentityCheckResult r = verify_compression_identity(which, 3, 2, 2);
    CHECK(r.deviation <= 1e-12);
  }
  CHECK_THROWS_AS(verify_compression_identity(CompressionLemma::PathToStar,
                                              6, 2, 2),
                  GuardError);
}

TEST_CASE("detectability products agree across the compression rewrite") {
  struct Instance {
    Graph g;
    int root;
  };
  const Instance instances[] = {{path_graph(4), 0},
                                {star_graph(4), 0},
                                {y_graph(1, 1, 2), 0}};
  const int k = 2, q = 2;
  const Eigen::Index siteDim = ipow(q, 2 * k);
  for (const auto& inst : instances) {
    RootedTree st = spanning_tree(inst.g, inst.root);
    DepthAssignment da = tree_depth(st, DepthMode::Exact);
    CompressedTree ct = compress(st, da);
    CompressionDlPair pair = compression_dl_pair(st, ct);
    LinearOperator dlSt = dl_operator({st.graph, k, q}, pair.stOrdering);
    LinearOperator dlCst = dl_operator({ct.graph, k, q}, pair.cstOrdering);
    std::mt19937_64 rng(17);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 2; ++trial) {
      Eigen::VectorXd x(dlSt.dim);
      for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = gauss(rng);
      Eigen::VectorXd w = x;
      for (const auto& path : pair.cyclicPaths) {
        w = cyclic_permutation(path, inst.g.n, siteDim).apply(w);
      }
      Eigen::VectorXd lhs = dlSt.apply(x);
      Eigen::VectorXd rhs = dlCst.apply(w);
      CHECK((lhs - rhs).lpNorm<Eigen::Infinity>() <= 1e-11 * x.norm());
    }
  }
}

TEST_CASE("dl and union-bound inequalities hold on small instances") {
  const int k = 2, q = 2;
  for (const Graph& g : {path_graph(4), star_graph(4)}) {
    HamiltonianSpec spec{g, k, q};
    // Trusted numeric gap from the dense effective model (checked elsewhere).
    LinearOperator h = assemble_full(spec);
    Eigen::MatrixXd ground = ground_state_basis(g.n, k, q);
    GapResult gap = spectral_gap(h, ground, g.edgeCount() + 1.0);
    auto ordering = g.sortedEdges();
    std::mt19937_64 rng(5);
    for (int t = 0; t < 5; ++t) {
      if (t > 0) std::shuffle(ordering.begin(), ordering.end(), rng);
      DlCheckResult r = dl_qub_check(spec, ordering, gap.gap, 5, 99 + t);
      CHECK(r.dlHolds);
      CHECK(r.qubHolds);
      CHECK(r.maxNormSq <= r.dlBound + 1e-12);
      CHECK(r.gParam == dl_g_parameter(g));
    }
  }
}
