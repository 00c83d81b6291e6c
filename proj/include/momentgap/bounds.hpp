// bounds.hpp -- analytic gap bounds (Knabe criterion, subsystem boosting,
// complete-graph and small exact gaps, 1D baselines, the detectability-lemma
// chain), circuit-size bounds, and machine-checkable bound certificates.
#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "momentgap/common.hpp"
#include "momentgap/graph.hpp"

namespace momentgap {

// Finite-size criterion: gap(G) >= 2 (minStarGap - 1/2), where minStarGap is
// the star gap at size (max degree + 1). Vacuous (<= 0) below 1/2.
double knabe_general(double minStarGap);

enum class BoostFamily { Star, Complete };

// Subsystem boost within a nested family:
// gap(n) >= ((n-2)/(m-2)) (gap(m) - (n-m)/(n-2)), n >= m >= 3.
double knabe_subsystem_boost(BoostFamily family, double gapM, int m, int n);

// Complete-graph lower bound at k = 2: (n-2)(1 - 2q/(q^2+1)).
double cg_lower_k2(int n, int q);

enum class SmallGap { Star3, Star4, Cg3 };

// Closed-form gaps: star(3) k=2 -> 1 - q/(q^2+1);
// star(4) k=2 -> 3/2 - sqrt(q^4+18q^2+1)/(2(q^2+1));
// complete(3) k=2 -> 2 (1 - q/(q^2+1)).
double exact_small_gap(SmallGap which, int q);

struct Cg3Diagonalization {
  Eigen::MatrixXd overlap;      // 6x6 normalized V-basis overlap matrix
  Eigen::VectorXd eigenvalues;  // ascending
  // Exact eigenvalues (q^2 + 1 + q kappa)/(q^2 + 1), kappa in {-2,-1,-1,1,1,2},
  // ascending, reduced (num, den) pairs.
  std::vector<std::pair<long long, long long>> exactEigenvalues;
  std::pair<long long, long long> largest;  // (q+1)^2 / (q^2+1), reduced
  // Residual of the integer-matrix eigenvalue check
  // K = (q^2+1)(X - I)/q with spectrum {-2,-1,-1,1,1,2}.
  double integerEigenDeviation = 0.0;
  double gap = 0.0;  // 3 - largest eigenvalue = 2 (q^2-q+1)/(q^2+1)
};

// Diagonalizes the complete-graph n=3, k=2 excited block in the V basis.
Cg3Diagonalization cg3_basis_diagonalization(int q);

// gap <= min vertex degree, for any connected graph.
double min_degree_upper(const Graph& g);

enum class OneDMode { BHH, PrimePower };

// Block length l = ceil(2.5 log_q(4k)) (BHH) or ceil(2.5 log_2(4k)).
int one_d_block_length(int k, int q, OneDMode mode);

// Path-graph gap lower bounds for n >= block length:
// BHH:        1/(4l) * 1/(l ((q^2+1) e)^l)
// PrimePower: 1/(4l) * 1/120000 * 1/(l^4 2^(2l)).
double one_d_gap_lower(int n, int k, int q, OneDMode mode);

enum class ChainMode { ClosedForm, BetaRecursion };

// Detectability-lemma chain: gap(G) >= (35/768) delta1D / (4 (g+1)^2)^d for
// d >= 1 with g the max compressed-tree degree and d the spanning-tree depth;
// d = 0 gives delta1D / 16. BetaRecursion iterates
// beta_1 = 1 - 1/(1 + delta1D/4), beta_i = beta_{i-1}/(alpha + beta_{i-1}),
// alpha = 4 (g+1)^2, and returns beta_{d+1}/4 (at least the closed form for
// d >= 1). Needs g >= 2, d >= 0, delta1D in (0, 1].
double dl_chain_lower(int g, int d, double delta1D, ChainMode mode);

enum class LogBase { E, Two };

double log_in_base(double x, LogBase base);

struct SizeBound {
  double tau = 0.0;
  double gap = 0.0;
  double epsilon = 0.0;
  int n = 0, k = 0, q = 0;
  long long edgeCount = 0;
  LogBase logBase = LogBase::E;
  std::string mode;  // "generic" (base e) or "base2-table" (base 2)
};

// tau = (|E|/gap) (2 n k log_b(q) + log_b(1/eps)); gap must be positive.
SizeBound size_bound(long long edgeCount, double gap, int n, int k, int q,
                     double epsilon, LogBase base);

// Size under an optimal-gap assumption: n^2 k log_b(2) + (n/2) log_b(1/eps).
double optimal_size(int n, int k, double epsilon, LogBase base);

struct BoundStep {
  std::string id;
  std::string anchor;  // formula or rule text
  std::vector<std::pair<std::string, double>> inputs;
  double output = 0.0;
};

struct BoundCertificate {
  std::string graphSpec;  // generator string when known
  Graph graph;
  int n = 0, k = 0, q = 0;
  double epsilon = 0.0;
  LogBase logBase = LogBase::E;
  std::vector<BoundStep> steps;
  double lower = 0.0;
  double upper = 0.0;
  std::optional<SizeBound> size;
  bool degraded = false;  // a numeric branch was skipped for budget
  std::vector<std::string> notes;
};

struct BoundReportOptions {
  double epsilon = 1e-6;
  LogBase logBase = LogBase::E;
  // Shared budget: exact-depth expanded states and the largest representation
  // dimension attempted for numeric sub-gaps.
  long long budget = 1000000;
  double tol = 1e-8;
  int maxIter = 5000;
  std::uint64_t seed = kDefaultSeed;
};

// Assembles the full bound chain for a connected graph: min-degree upper
// bound; exact special cases; Knabe from the (max degree + 1) star gap
// (numeric within budget, else table, else boosted from the largest available
// star); the detectability-lemma chain from the compressed spanning tree with
// a numeric or analytic 1D baseline; best lower bound; size bound.
BoundCertificate bound_report(const Graph& g, int k, int q,
                              const BoundReportOptions& opts = {});

struct VerifyStepResult {
  std::string id;
  double expected = 0.0;
  double recomputed = 0.0;
  double relError = 0.0;  // |recomputed - expected| / max(1, |expected|)
  bool ok = false;
  std::string note;
};

struct VerifyReport {
  bool ok = false;
  std::vector<VerifyStepResult> steps;
};

// Independently recomputes every step output from its recorded inputs (and
// the certificate's graph), within relTol.
VerifyReport verify_certificate(const BoundCertificate& cert,
                                double relTol = 1e-12);

}  // namespace momentgap
