#include <cmath>

#include "doctest.h"
#include "momentgap/common.hpp"
#include "momentgap/semiclassical.hpp"
#include "momentgap/tables.hpp"

using namespace momentgap;

TEST_CASE("block eigenvalues at theta = 0") {
  auto [lo, hi] = sc_eigenvalues(0.0, 0.0, 2);
  CHECK(lo == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(hi == doctest::Approx(0.5).epsilon(1e-12));
  // phi is irrelevant when sin(theta) = 0.
  auto [lo2, hi2] = sc_eigenvalues(0.0, 1.3, 2);
  CHECK(lo2 == doctest::Approx(lo).epsilon(1e-14));
  CHECK(hi2 == doctest::Approx(hi).epsilon(1e-14));
}

TEST_CASE("ground manifold sits at theta* = arctan sqrt(q^2-1), phi = 0") {
  for (int q : {2, 3, 4}) {
    double theta = sc_ground_theta(q);
    CHECK(std::tan(theta) ==
          doctest::Approx(std::sqrt(q * q - 1.0)).epsilon(1e-12));
    auto [lo, hi] = sc_eigenvalues(theta, 0.0, q);
    CHECK(std::abs(lo) <= 1e-12);
    CHECK(hi > 0.1);
  }
}

TEST_CASE("both branches are nonnegative over the whole parameter grid") {
  const double pi = 3.14159265358979323846;
  double minLo = 1.0;
  for (int i = 0; i <= 180; ++i) {
    for (int j = 0; j <= 180; ++j) {
      double theta = pi * i / 180.0;
      double phi = -pi + 2.0 * pi * j / 180.0;
      auto [lo, hi] = sc_point(theta, phi, 2).eigenvalues;
      CHECK(lo <= hi + 1e-15);
      if (lo < minLo) minLo = lo;
    }
  }
  CHECK(minLo >= -1e-9);
  CHECK(minLo <= 1e-6);  // the grid passes near the ground manifold
}

TEST_CASE("eigenvalues are symmetric in the sign of phi") {
  for (double theta : {0.3, 0.9, 1.4}) {
    for (double phi : {0.2, 0.8, 2.5}) {
      auto a = sc_eigenvalues(theta, phi, 2);
      auto b = sc_eigenvalues(theta, -phi, 2);
      CHECK(a.first == doctest::Approx(b.first).epsilon(1e-14));
      CHECK(a.second == doctest::Approx(b.second).epsilon(1e-14));
    }
  }
}

TEST_CASE("asymptotic gap is 1 - 1/q^2") {
  CHECK(sc_asymptotic_gap(2) == 0.75);
  CHECK(sc_asymptotic_gap(3) == doctest::Approx(8.0 / 9.0).epsilon(1e-15));
  CHECK_THROWS_AS(sc_asymptotic_gap(1), ValidationError);
  CHECK_THROWS_AS(sc_eigenvalues(0.0, 0.0, 1), ValidationError);
}

TEST_CASE("star gaps increase toward the asymptote and stay below it") {
  for (int q : {2, 3, 4}) {
    double prev = 0.0;
    for (int n = 4; n <= star_gap_reference_max_n(2, q); ++n) {
      auto ref = star_gap_reference_lookup(2, q, n);
      REQUIRE(ref.has_value());
      CHECK(*ref >= prev - 1e-12);
      CHECK(*ref < sc_asymptotic_gap(q));
      prev = *ref;
    }
  }
}
