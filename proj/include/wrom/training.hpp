#pragma once

#include <wrom/quadrature.hpp>
#include <wrom/stochastics.hpp>
#include <wrom/types.hpp>

#include <optional>
#include <string>

namespace wrom {

enum class Variant {
  Standard,           // uniform nodes, w = 1/n_t
  MonteCarlo,         // distribution nodes, w = 1/n_t
  UniformMonteCarlo,  // uniform nodes, w = rho_i / n_t
  ClenshawCurtis,     // tensor CC nodes, w = omega_i rho_i
  GaussLegendre,      // tensor GL nodes, w = omega_i rho_i
  GaussJacobi,        // tensor GJ nodes, w = omega_i
  SparseGaussLegendre,  // Smolyak GL nodes, w = omega_i rho_i (may be signed)
  SparseGaussJacobi,    // Smolyak GJ nodes, w = omega_i (may be signed)
};

std::string variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& name);
bool variant_uses_quadrature(Variant v);

/// Training nodes with the weights the basis builder will use. quad_weights
/// keeps the raw quadrature weights for the quadrature-backed variants so the
/// stored pod_weights can be recomputed and audited.
struct TrainingSet {
  Variant variant = Variant::Standard;
  Matrix nodes;        // n_t x K
  Vector pod_weights;  // n_t
  Vector quad_weights; // n_t for quadrature variants, empty otherwise
  std::optional<Seed> seed;
};

/// size_or_level is the sample count for the Monte-Carlo variants and the
/// univariate level for the quadrature variants.
TrainingSet build_training_set(Variant variant, const BetaBox& dist, int size_or_level,
                               Seed seed, Index node_budget = kDefaultNodeBudget);

/// Smallest tensor Clenshaw-Curtis grid (linear per-axis growth m = 1, 2, ...)
/// whose node count strictly inside (1,3)^K reaches interior_target. Boundary
/// nodes carry zero weight whenever the density vanishes there, so the useful
/// size of a CC set is its interior count.
TrainingSet build_cc_set_with_interior_target(const BetaBox& dist, int interior_target,
                                              Index node_budget = kDefaultNodeBudget);

enum class PoolKind { Uniform, EquispacedGrid, Distribution };

/// Candidate pool for greedy selection; pod_weights are set to 1 and unused.
/// For EquispacedGrid, n_t is rounded down to the largest K-th power.
TrainingSet build_greedy_pool(PoolKind kind, const BetaBox& dist, int n_t, Seed seed);

void write_training_set_csv(const std::string& path, const TrainingSet& ts);
TrainingSet read_training_set_csv(const std::string& path);

}  // namespace wrom
