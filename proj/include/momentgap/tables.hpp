// tables.hpp -- embedded reference tables (star gaps, any-graph lower bounds,
// boosted bounds, size coefficients) and their regeneration with deviation
// columns.
#pragma once

#include <optional>
#include <vector>

#include "momentgap/effective.hpp"

namespace momentgap {

struct StarGapRow {
  int k = 0;
  int q = 0;
  int nstar = 0;
  double gap = 0.0;  // reference value, four decimals
};

// Reference star-graph gaps, k in 2..5.
const std::vector<StarGapRow>& star_gap_reference();
std::optional<double> star_gap_reference_lookup(int k, int q, int nstar);
// Largest tabulated nstar for (k, q); 0 when the pair is absent.
int star_gap_reference_max_n(int k, int q);

struct StarGapComputedRow {
  int k = 0, q = 0, nstar = 0;
  double computed = 0.0;
  std::optional<double> reference;
  double deviation = 0.0;  // computed - reference when both present
  bool skipped = false;    // row exceeded the dimension budget
};

// Computes star gaps over the requested range. Rows whose representation
// dimension exceeds `budget` (or a hard guard) come back with skipped = true.
std::vector<StarGapComputedRow> star_gap_table(
    int k, const std::vector<int>& qs, int nMin, int nMax, long long budget,
    const ComputeGapOptions& opts = {});

struct AnyGraphRow {
  int k = 0;
  int nstar = 0;         // largest tabulated star size (q = 2)
  double starGap = 0.0;  // reference star gap at nstar
  double lower = 0.0;    // reference any-graph bound 2 (starGap - 1/2)
};
const std::vector<AnyGraphRow>& any_graph_reference();

struct AnyGraphComputedRow {
  int k = 0, nstar = 0;
  double starGap = 0.0;
  double computed = 0.0;
  double reference = 0.0;
  double deviation = 0.0;
};
// Recomputes the any-graph bound column from the reference star gaps.
std::vector<AnyGraphComputedRow> any_graph_table();

struct BoostedRow {
  int k = 0;
  int mstar = 0;         // tabulated star size (q = 2)
  double gapM = 0.0;     // reference star gap at mstar
  int n = 0;             // boosted system size
  double boosted = 0.0;  // reference boosted star gap
  double lower = 0.0;    // reference any-graph bound from the boosted gap
};
const std::vector<BoostedRow>& boosted_reference();

struct BoostedComputedRow {
  int k = 0, mstar = 0, n = 0;
  double gapM = 0.0;
  double boostedComputed = 0.0;
  double boostedReference = 0.0;
  double boostedDeviation = 0.0;
  double lowerComputed = 0.0;
  double lowerReference = 0.0;
  double lowerDeviation = 0.0;
};
// Recomputes the boosted columns from the reference star gaps.
std::vector<BoostedComputedRow> boosted_table();

struct SizeTableRow {
  int k = 0;
  int kappa = 0;             // printed degree threshold
  double coefficient = 0.0;  // printed base-2 size coefficient (rounded up)
  int siteFactor = 0;        // 2k: tau = coeff |E| (siteFactor n + log2(1/eps))
  bool degreeCaveat = false;  // k = 4 row needs min degree >= 3
};
const std::vector<SizeTableRow>& size_table_reference();

struct SizeTableComputedRow {
  int k = 0, kappa = 0, siteFactor = 0;
  double gapLower = 0.0;             // any-graph chain gap lower bound
  double coefficientComputed = 0.0;  // 1 / gapLower
  double coefficientReference = 0.0;
  bool degreeCaveat = false;
};
// Recomputes the size coefficients from the boosted / any-graph chains.
std::vector<SizeTableComputedRow> size_table();

}  // namespace momentgap
