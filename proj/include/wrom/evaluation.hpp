#pragma once

#include <wrom/reduced.hpp>
#include <wrom/stochastics.hpp>
#include <wrom/types.hpp>

#include <string>
#include <vector>

namespace wrom {

/// Monte-Carlo estimate of the mean squared V-norm reduction error,
/// (1/M) sum_m |u(y^m) - u_N(y^m)|_X^2, as a function of N.
struct ErrorCurve {
  std::vector<int> N_values;
  Vector mse;
  Seed seed = 0;
  int M = 0;
  std::string variant;
  std::string case_name;
  std::vector<int> near_singular_N;  // N values where any reduced solve was flagged
};

/// Draws one M-sample set from dist (so curves sharing a seed share the
/// sample), truth-solves it once, and reuses those solutions across all N.
ErrorCurve mc_error_curve(const AffineModel& model, const ReducedModel& rm,
                          const BetaBox& dist, int M, const std::vector<int>& N_values,
                          Seed seed, int threads = 1);

struct ExpectationResult {
  Field mean_field;      // (1/M) sum lifted u_N(y^m)
  double mean_output = 0.0;  // (1/M) sum s(u_N(y^m))
};

ExpectationResult expectation_field(const AffineModel& model, const ReducedModel& rm,
                                    const BetaBox& dist, int M, int N, Seed seed,
                                    int threads = 1);

/// Per-N tabulation of several curves on a common N grid, with ratios
/// against the first curve. Rejects mismatched grids and empty input.
struct ComparisonReport {
  std::vector<int> N_values;
  std::vector<std::string> names;
  Matrix mse;     // curves x N
  Matrix ratio;   // curves x N, row i = mse_i / mse_0
};

ComparisonReport compare_curves(const std::vector<ErrorCurve>& curves);
std::string comparison_summary(const ComparisonReport& report);

}  // namespace wrom
