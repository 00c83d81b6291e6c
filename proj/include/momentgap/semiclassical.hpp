// semiclassical.hpp -- the classical-spin reduction of the star Hamiltonian:
// a 2x2 Hermitian pencil in the polar angles of the collective spin, its
// eigenvalues, the zero-energy ground manifold, and the asymptotic gap.
#pragma once

#include <utility>

namespace momentgap {

struct SemiclassicalPoint {
  double theta = 0.0;
  double phi = 0.0;
  int q = 2;
  std::pair<double, double> eigenvalues;  // (lambda_minus, lambda_plus)
};

// Eigenvalues of the 2x2 matrix
//   [ 1/2 - (q/(2(q^2+1)))(1+cos t)      (sin t/(2(q^2+1)))(-q^2 cos p + i sin p) ]
//   [ conj                               1/2 + (q/(2(q^2+1)))(1-cos t)            ]
// returned ascending. q >= 2.
std::pair<double, double> sc_eigenvalues(double theta, double phi, int q);

SemiclassicalPoint sc_point(double theta, double phi, int q);

// Angle of the zero-energy point: arctan sqrt(q^2 - 1) at phi = 0.
double sc_ground_theta(int q);

// Large-n star-gap asymptote 1 - 1/q^2.
double sc_asymptotic_gap(int q);

}  // namespace momentgap
