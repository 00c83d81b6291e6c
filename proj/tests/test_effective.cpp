#include <Eigen/Dense>
#include <cmath>

#include "doctest.h"
#include "momentgap/effective.hpp"
#include "momentgap/graph.hpp"
#include "momentgap/operators.hpp"
#include "momentgap/permsym.hpp"
#include "momentgap/spectra.hpp"
#include "test_util.hpp"

using namespace momentgap;

TEST_CASE("site models have the expected dimensions") {
  CHECK(build_k2_model(2).perSiteDim == 2);
  CHECK(build_k2_model(3).perSiteDim == 2);
  CHECK(build_qr_model(2, 2).perSiteDim == 2);
  CHECK(build_qr_model(3, 2).perSiteDim == 5);
  CHECK(build_qr_model(4, 2).perSiteDim == 14);
  CHECK(build_qr_model(3, 3).perSiteDim == 6);
  CHECK_THROWS_AS(build_qr_model(5, 2), GuardError);
}

TEST_CASE("local terms are projector-like with eigenvalues in [0, 1]") {
  for (const EffectiveModel& m :
       {build_k2_model(2), build_qr_model(3, 2), build_qr_model(4, 2)}) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.localTerm);
    CHECK(es.eigenvalues().minCoeff() >= -1e-10);
    CHECK(es.eigenvalues().maxCoeff() <= 1.0 + 1e-10);
    CHECK((m.localTerm - m.localTerm.transpose()).cwiseAbs().maxCoeff() <=
          1e-12);
  }
}

TEST_CASE("effective and full gaps agree on all n=3 connected graphs") {
  for (const Graph& g : testutil::connected_graphs(3)) {
    double full = compute_gap(g, 2, 2, Representation::Full).result.gap;
    double eff =
        compute_gap(g, 2, 2, Representation::EffectiveK2).result.gap;
    CHECK(std::abs(full - eff) <= 1e-8);
  }
}

TEST_CASE("qr model matches the full space at k=3 on a path") {
  double full = compute_gap(path_graph(3), 3, 2, Representation::Full)
                    .result.gap;
  double eff = compute_gap(path_graph(3), 3, 2, Representation::EffectiveQR)
                   .result.gap;
  CHECK(std::abs(full - eff) <= 1e-7);
}

TEST_CASE("star spin form has the same spectrum as the effective model") {
  EffectiveModel m2 = build_k2_model(2);
  EffectiveModel m3 = build_k2_model(3);
  for (int n = 3; n <= 10; ++n) {
    for (const EffectiveModel& m : {m2, m3}) {
      LinearOperator h = assemble_effective(star_graph(n), m);
      Eigen::MatrixXd dense = materialize(h);
      Eigen::MatrixXd spin = star_spin_hamiltonian(n, m.q);
      // Spin form puts the center at site 0; the star generator at n-1.
      std::vector<int> dest(n);
      dest[n - 1] = 0;
      for (int i = 0; i < n - 1; ++i) dest[i] = i + 1;
      LinearOperator relab =
          site_permutation_operator(n, m.perSiteDim, dest);
      Eigen::MatrixXd p = materialize(relab);
      Eigen::MatrixXd moved = p * dense * p.transpose();
      CHECK((moved - spin).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
  CHECK_THROWS_AS(star_spin_hamiltonian(13, 2), GuardError);
}

TEST_CASE("known dense effective spectra") {
  EffectiveModel m = build_k2_model(2);
  Eigen::VectorXd star3 = dense_spectrum(assemble_effective(star_graph(3), m));
  // Two zero modes, then the gap at 0.6.
  CHECK(star3(0) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(star3(2) == doctest::Approx(0.6).epsilon(1e-9));
  Eigen::VectorXd k3 = dense_spectrum(assemble_effective(complete_graph(3), m));
  CHECK(k3(2) == doctest::Approx(1.2).epsilon(1e-9));
}

TEST_CASE("ground basis dimension follows the global gram rank") {
  CHECK(effective_ground_basis(3, build_k2_model(2)).cols() == 2);
  CHECK(effective_ground_basis(3, build_qr_model(3, 2)).cols() == 6);
  CHECK(effective_ground_basis(4, build_qr_model(4, 2)).cols() == 24);
  CHECK(compute_gap(star_graph(3), 2, 2).result.groundDim == 2);
  CHECK(compute_gap(star_graph(3), 3, 2).result.groundDim == 6);
}

TEST_CASE("representation_dim mirrors the dispatch rules") {
  CHECK(representation_dim(10, 2, 2) == 1024);
  CHECK(representation_dim(19, 2, 2) == 524288);
  CHECK(representation_dim(3, 3, 2) == 125);
  CHECK(representation_dim(5, 4, 2) == 537824);  // 14^5
  CHECK(representation_dim(3, 1, 2) == 64);
  CHECK(representation_dim(11, 1, 2) == 4194304);  // exactly the 2^22 cap
  CHECK(representation_dim(12, 1, 2) == -1);
  CHECK(representation_dim(5, 5, 2) == -1);
  CHECK(representation_dim(30, 2, 2) == -1);
}

TEST_CASE("auto dispatch picks the representation by k") {
  CHECK(compute_gap(star_graph(3), 2, 2).representation == "effective-k2");
  CHECK(compute_gap(star_graph(3), 3, 2).representation == "effective-qr");
  CHECK(compute_gap(path_graph(2), 1, 2).representation == "full");
  CHECK(compute_gap(star_graph(3), 2, 2, Representation::Full).dim == 4096);
}

TEST_CASE("oversized representations are rejected") {
  CHECK_THROWS_AS(compute_gap(star_graph(8), 2, 2, Representation::Full),
                  GuardError);
  CHECK_THROWS_AS(compute_gap(star_graph(13), 3, 2), GuardError);  // 5^13
}
