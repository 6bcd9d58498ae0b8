#pragma once

#include <wrom/thermal_block.hpp>
#include <wrom/training.hpp>
#include <wrom/types.hpp>

namespace wrom {

/// Truth solutions at the given nodes, one column per node. Solver failures
/// are reported with the offending node index. Solves run in parallel over
/// nodes; the result is identical for any thread count.
Matrix compute_snapshots(const AffineModel& model, const Matrix& nodes, int threads = 1);

/// Snapshot correlation matrix C_ij = <phi_i, phi_j>_X, symmetrized as
/// (C + C')/2 to remove rounding asymmetry.
Matrix correlation(const Matrix& snapshots, const SparseMatrix& X);

struct PodResult {
  Matrix coefficients;    // n_t x N, column i combines snapshots into basis i
  Vector eigenvalues;     // all n_t eigenvalues, nonincreasing
  int retained = 0;       // N
  int clamped_negative = 0;  // weights clamped to 0 before the eigensolve
};

/// Weighted POD eigenproblem. The signed-weight-safe symmetrization
/// S = D^(1/2) C D^(1/2), D = diag(w), has the same nonzero spectrum as the
/// preconditioned matrix diag(w) C; coefficients are recovered exactly as
/// n_i = D^(1/2) v_i. Negative weights (possible for sparse-grid variants)
/// are clamped to 0 and counted. Retains
/// N = min(N_max, #{lambda_i > tol_rel * lambda_1}).
PodResult weighted_pod(const Matrix& C, const Vector& weights, int N_max,
                       double tol_rel = 1e-12);

/// Lifts coefficient columns to fields xi_i = sum_j coeff_ji phi_j and
/// X-orthonormalizes them by modified Gram-Schmidt with one
/// re-orthogonalization pass. Columns whose post-projection X-norm drops
/// below 1e-10 of the pre-projection norm are deflated (dropped).
Matrix lift_basis(const Matrix& snapshots, const Matrix& coefficients, const SparseMatrix& X);

/// Drops training nodes whose pod_weight is exactly zero (e.g. boundary
/// Clenshaw-Curtis nodes under a vanishing density) so no truth solves are
/// wasted on them.
TrainingSet prune_zero_weights(const TrainingSet& ts, Index* pruned = nullptr);

struct PodBasis {
  Matrix Z;            // dofs x N, X-orthonormal columns
  Vector eigenvalues;  // full spectrum, nonincreasing
  Index pruned_zero_weight = 0;
  int clamped_negative = 0;
};

/// Full offline pipeline: prune, solve snapshots, correlate, eigensolve, lift.
PodBasis run_weighted_pod(const AffineModel& model, const TrainingSet& ts, int N_max,
                          double tol_rel = 1e-12, int threads = 1);

}  // namespace wrom
