#pragma once

#include <wrom/evaluation.hpp>
#include <wrom/quadrature.hpp>
#include <wrom/reduced.hpp>
#include <wrom/types.hpp>

#include <string>
#include <vector>

namespace wrom {

/// Writes the reduced model (basis over mesh dofs, spectrum, provenance) as a
/// versioned JSON artifact. Doubles round-trip exactly.
void save_reduced_model(const std::string& path, const ReducedModel& rm);

struct LoadedModel {
  AffineModel model;  // rebuilt from the persisted mesh size and K
  ReducedModel rm;    // re-projected onto the persisted basis
};

LoadedModel load_reduced_model(const std::string& path);

void write_rule_csv(const std::string& path, const MultiRule& rule);
void write_error_curve_csv(const std::string& path, const ErrorCurve& curve);
void write_comparison_csv(const std::string& path, const ComparisonReport& report);

/// Full vertex grid dump (boundary rows carry the Dirichlet zero).
void write_field_csv(const std::string& path, const Mesh& mesh, const Field& field);

}  // namespace wrom
