#pragma once

#include <wrom/thermal_block.hpp>
#include <wrom/types.hpp>

#include <string>
#include <vector>

namespace wrom {

/// Provenance of a reduced model, persisted with it and echoed into result
/// CSVs.
struct ModelMetadata {
  std::string builder;      // "pod" or "greedy"
  std::string variant;      // training variant or pool/weight description
  std::string case_name;    // preset name or "custom"
  int mesh_n = 0;
  int K = 0;
  Vector alpha;
  Vector beta;
  Seed seed = 0;
  int size_or_level = 0;    // n_t, level, or interior target, per variant
  int N_max = 0;
};

/// Dense Galerkin projection of the affine model onto an X-orthonormal basis.
/// Online solves are independent of the mesh size.
struct ReducedModel {
  Matrix Z;                            // dofs x N_max basis columns
  std::vector<Matrix> reduced_blocks;  // K of N_max x N_max, Z' A_k Z
  Vector reduced_load;                 // Z' F_0
  Vector eigenvalues;                  // POD spectrum; empty for greedy
  Matrix chosen;                       // greedy selections; empty for POD
  ModelMetadata meta;

  int n_max() const { return static_cast<int>(Z.cols()); }
};

ReducedModel project_model(const AffineModel& model, Matrix basis, ModelMetadata meta);

struct ReducedSolution {
  Vector coeffs;
  bool near_singular = false;  // reciprocal condition estimate below 1e-12
};

/// Solves the leading N x N reduced system at y. Near-singularity is reported
/// through the flag, never silently regularized: it is the diagnostic for
/// unrepresentative training sets.
ReducedSolution reduced_solve(const ReducedModel& rm, const Parameter& y, int N);

/// Lifts reduced coefficients back to a truth-space field.
Field lift(const ReducedModel& rm, const Vector& coeffs);

/// s(u) = int_D u dx by the vertex rule consistent with the load assembly,
/// so s(u(y)) equals the compliance F(u(y)) for f == 1.
double output_functional(const Field& field, const Mesh& mesh);

}  // namespace wrom
