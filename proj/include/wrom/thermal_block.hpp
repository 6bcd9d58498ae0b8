#pragma once

#include <wrom/fem.hpp>
#include <wrom/types.hpp>

#include <vector>

namespace wrom {

/// Parameter box bounds shared by the whole model family.
inline constexpr double kParamMin = 1.0;
inline constexpr double kParamMax = 3.0;

/// Affinely decomposed diffusion model on the unit square: the operator is
/// sum_k y_k A_k where A_k integrates over the k-th subsquare of a uniform
/// sqrt(K) x sqrt(K) partition, and the load is f == 1. Blocks are indexed
/// row-major from the lower-left subsquare, x fastest.
struct AffineModel {
  int K = 0;
  Mesh mesh;
  std::vector<SparseMatrix> stiffness_blocks;  // A_1..A_K; A_0 is zero
  Vector load;                                 // F_0; parameter blocks are zero
  SparseMatrix X;                              // V-inner-product matrix
};

/// K must be 4 or 9 and sqrt(K) must divide mesh.n_per_side.
AffineModel build_thermal_block(Mesh mesh, int K);

bool in_parameter_box(const Parameter& y);
void require_in_box(const Parameter& y, int K);

/// A(y) = sum_k y_k A_k. Rejects parameters outside [1,3]^K.
SparseMatrix assemble_operator(const AffineModel& model, const Parameter& y);

Field truth_solve(const AffineModel& model, const Parameter& y);

/// Exact coercivity lower bound of A(y) with respect to X: min_k y_k.
double coercivity_lower_bound(const Parameter& y);

}  // namespace wrom
