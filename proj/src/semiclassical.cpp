// semiclassical.cpp -- closed-form eigenvalues of the classical-spin 2x2.
#include "momentgap/semiclassical.hpp"

#include <cmath>

#include "momentgap/common.hpp"

namespace momentgap {

std::pair<double, double> sc_eigenvalues(double theta, double phi, int q) {
  if (q < 2) throw ValidationError("q must be >= 2");
  const double denom = 2.0 * (static_cast<double>(q) * q + 1.0);
  const double a = 0.5 - (q / denom) * (1.0 + std::cos(theta));
  const double d = 0.5 + (q / denom) * (1.0 - std::cos(theta));
  const double bRe = (std::sin(theta) / denom) *
                     (-static_cast<double>(q) * q * std::cos(phi));
  const double bIm = (std::sin(theta) / denom) * std::sin(phi);
  const double mean = 0.5 * (a + d);
  const double root =
      std::sqrt(0.25 * (a - d) * (a - d) + bRe * bRe + bIm * bIm);
  return {mean - root, mean + root};
}

SemiclassicalPoint sc_point(double theta, double phi, int q) {
  SemiclassicalPoint p;
  p.theta = theta;
  p.phi = phi;
  p.q = q;
  p.eigenvalues = sc_eigenvalues(theta, phi, q);
  return p;
}

double sc_ground_theta(int q) {
  if (q < 2) throw ValidationError("q must be >= 2");
  return std::atan(std::sqrt(static_cast<double>(q) * q - 1.0));
}

double sc_asymptotic_gap(int q) {
  if (q < 2) throw ValidationError("q must be >= 2");
  return 1.0 - 1.0 / (static_cast<double>(q) * q);
}

}  // namespace momentgap
