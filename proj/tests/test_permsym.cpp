#include <Eigen/Dense>
#include <cmath>

#include "doctest.h"
#include "momentgap/common.hpp"
#include "momentgap/permsym.hpp"

using namespace momentgap;

TEST_CASE("symmetric group enumeration and composition") {
  auto s3 = symmetric_group(3);
  REQUIRE(s3.size() == 6);
  CHECK(s3[0] == Perm{0, 1, 2});
  CHECK(s3[5] == Perm{2, 1, 0});
  CHECK(cycle_count(s3[0]) == 3);
  CHECK(cycle_count(Perm{1, 0, 2}) == 2);
  CHECK(cycle_count(Perm{1, 2, 0}) == 1);
  for (const Perm& p : s3) {
    CHECK(perm_compose(p, perm_inverse(p)) == s3[0]);
    CHECK(perm_compose(perm_inverse(p), p) == s3[0]);
  }
}

TEST_CASE("gram matrix entries are d^cycles and ranks are as known") {
  auto s3 = symmetric_group(3);
  for (double d : {2.0, 3.0}) {
    Eigen::MatrixXd g = gram_matrix(3, d);
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        int c = cycle_count(perm_compose(s3[i], perm_inverse(s3[j])));
        CHECK(g(i, j) == doctest::Approx(std::pow(d, c)).epsilon(1e-12));
      }
    }
  }
  // Full rank k! once d >= k; Catalan numbers at d = 2.
  CHECK(gram_rank(2, 2) == 2);
  CHECK(gram_rank(3, 2) == 5);
  CHECK(gram_rank(4, 2) == 14);
  CHECK(gram_rank(5, 2) == 42);
  CHECK(gram_rank(3, 3) == 6);
  CHECK(gram_rank(4, 4) == 24);
}

TEST_CASE("pseudo inverse satisfies the Penrose identity on a singular gram") {
  Eigen::MatrixXd g = gram_matrix(3, 2.0);
  Eigen::MatrixXd w = pseudo_inverse(g);
  CHECK((g * w * g - g).cwiseAbs().maxCoeff() <= 1e-9);
  CHECK((w - w.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("permutation vectors have q^k ones and gram overlaps") {
  for (int q : {2, 3}) {
    auto s3 = symmetric_group(3);
    Eigen::MatrixXd g = gram_matrix(3, q);
    for (size_t i = 0; i < s3.size(); ++i) {
      Eigen::VectorXd vi = perm_vector(s3[i], q);
      CHECK(perm_vector_support(s3[i], q).size() ==
            static_cast<size_t>(ipow(q, 3)));
      CHECK(vi.sum() == doctest::Approx(ipow(q, 3)));
      for (size_t j = 0; j < s3.size(); ++j) {
        Eigen::VectorXd vj = perm_vector(s3[j], q);
        CHECK(vi.dot(vj) == doctest::Approx(g(i, j)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("k=1 projector is the rank-one maximally entangled state") {
  // P = |id><id| / q^2: the single permutation state normalized by
  // gram(1, q^2) = q^2.
  const int q = 2;
  HaarProjector p = haar_projector(1, q, 1 << 8);
  REQUIRE(p.hasDense());
  Eigen::VectorXd v = perm_vector(Perm{0}, q);
  Eigen::VectorXd two(p.dim);
  for (Eigen::Index i = 0; i < p.siteDim; ++i) {
    two.segment(i * p.siteDim, p.siteDim) = v(i) * v;
  }
  Eigen::MatrixXd expected = two * two.transpose() / (q * q);
  CHECK((p.dense - expected).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("projector trace equals the two-site gram rank") {
  CHECK(haar_projector(2, 2).trace() == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(haar_projector(3, 2).trace() == doctest::Approx(6.0).epsilon(1e-10));
  CHECK(haar_projector(4, 2).trace() == doctest::Approx(24.0).epsilon(1e-8));
  CHECK(haar_projector(2, 3).trace() == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("factored apply matches the dense projector") {
  for (auto [k, q] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
    HaarProjector p = haar_projector(k, q, 1 << 13);
    REQUIRE(p.hasDense());
    Eigen::VectorXd x = Eigen::VectorXd::Random(p.dim);
    Eigen::VectorXd y(p.dim);
    p.apply(x, y);
    CHECK((y - p.dense * x).lpNorm<Eigen::Infinity>() <= 1e-11);
  }
}

TEST_CASE("gram-schmidt oracle agrees with the weingarten projector") {
  for (auto [k, q] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    HaarProjector p = haar_projector(k, q, 1 << 13);
    Eigen::MatrixXd oracle = haar_projector_oracle(k, q);
    CHECK((p.dense - oracle).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("coefficient-space oracle matches at k=4 where dense is barred") {
  for (auto [k, q] :
       {std::pair{2, 2}, std::pair{3, 2}, std::pair{4, 2}, std::pair{2, 3}}) {
    HaarProjector p = haar_projector(k, q);
    Eigen::MatrixXd r =
        haar_oracle_coefficients(k, static_cast<double>(q) * q);
    Eigen::MatrixXd g = gram_matrix(k, static_cast<double>(q) * q);
    // Columns of B r are orthonormal.
    Eigen::MatrixXd overlap = r.transpose() * g * r;
    CHECK((overlap - Eigen::MatrixXd::Identity(r.cols(), r.cols()))
              .cwiseAbs()
              .maxCoeff() <= 1e-10);
    // B (r r^T) B^T is the same operator as B wg B^T.
    CHECK(support_quadratic_max_entry(p, r * r.transpose() - p.wg) <= 1e-12);
  }
}

TEST_CASE("monte carlo moments converge to the projector") {
  HaarProjector p = haar_projector(2, 2, 1 << 8);
  REQUIRE(p.hasDense());
  Eigen::MatrixXcd avg = haar_projector_monte_carlo(2, 2, 6000, 42);
  CHECK((avg.real() - p.dense).cwiseAbs().maxCoeff() <= 0.05);
  CHECK(avg.imag().cwiseAbs().maxCoeff() <= 0.05);
}

TEST_CASE("guards reject oversized projectors") {
  CHECK_THROWS_AS(haar_projector(5, 2), GuardError);
  CHECK_THROWS_AS(haar_projector(3, 3), GuardError);
  CHECK_THROWS_AS(haar_projector_oracle(4, 2), GuardError);
}

TEST_CASE("ground state basis has the global gram rank") {
  Eigen::MatrixXd b = ground_state_basis(3, 2, 2);
  CHECK(b.cols() == 2);
  CHECK(b.rows() == 4096);
  CHECK((b.transpose() * b - Eigen::MatrixXd::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() <= 1e-12);
  CHECK(ground_state_basis(3, 3, 2).cols() == 6);
}
