#pragma once

#include <wrom/pod.hpp>
#include <wrom/thermal_block.hpp>
#include <wrom/training.hpp>
#include <wrom/types.hpp>

#include <vector>

namespace wrom {

/// X-Riesz representer of a functional: solves X e = functional, so the dual
/// norm is sqrt(e' X e).
Vector riesz_representer(const SpdSolver& x_solver, const Vector& functional);

/// Offline data for the residual-based error estimator. With the affine
/// expansion r(v; y) = F(v) - sum_k y_k c_n A_k(xi_n, v), the residual dual
/// norm is a quadratic form in t[(n,k)] = y_k c_n over the stored Riesz
/// cross-inner-products, so online evaluation is mesh-independent.
struct EstimatorData {
  double riesz_ff = 0.0;  // <e_f, e_f>_X
  Matrix riesz_fa;        // N x K, <e_f, e_a^{n,k}>_X
  Matrix riesz_aa;        // NK x NK, flattened (n,k) -> n*K + k
  Vector riesz_f;         // representer of the load, kept for extension
  Matrix riesz_a;         // dofs x NK, representers of A_k(xi_n, .)
};

EstimatorData init_estimator(const AffineModel& model, const SpdSolver& x_solver);

/// Extends the estimator data with one new X-orthonormal basis vector.
void extend_estimator(EstimatorData& est, const AffineModel& model,
                      const SpdSolver& x_solver, const Vector& xi);

/// Squared residual dual norm at y for reduced coefficients c (length N).
double residual_dual_sq(const EstimatorData& est, const Parameter& y, const Vector& coeffs);

/// eta_N(y) = ||r(.; y)||_V' / alpha_LB(y); tiny negative quadratic-form
/// values are clamped to 0 before the square root.
double error_estimator(const EstimatorData& est, const Parameter& y, const Vector& coeffs);

enum class GreedyWeight { None, SqrtDensity, Density };

double greedy_weight(const BetaBox& dist, const Parameter& y, GreedyWeight mode);

enum class GreedyStop { ReachedNMax, Deflation, EstimatorUnderflow, PoolExhausted };

struct GreedyResult {
  Matrix chosen;                         // N x K selected parameters, in order
  std::vector<Index> chosen_indices;     // pool row of each selection
  Matrix Z;                              // dofs x N, X-orthonormal
  std::vector<Matrix> reduced_blocks;    // K dense N x N
  Vector reduced_load;                   // N
  EstimatorData estimator;
  GreedyStop stop = GreedyStop::ReachedNMax;
  std::vector<double> max_weighted_estimate;  // per completed iteration
};

/// Weighted greedy basis construction: starts from (2,...,2) (inserted into
/// the pool if absent), then repeatedly picks the pool point maximizing
/// w(y) eta_N(y) (ties broken toward the lowest pool index), truth-solves it
/// and extends the X-orthonormal basis. Stops at N_max, on deflation of the
/// new snapshot, or when every weighted estimate is zero (degenerate
/// sampling).
GreedyResult run_greedy(const AffineModel& model, const BetaBox& dist,
                        const TrainingSet& pool, int N_max,
                        GreedyWeight weight = GreedyWeight::SqrtDensity,
                        int threads = 1);

}  // namespace wrom
