#pragma once

#include <wrom/types.hpp>

namespace wrom {

/// Independent per-dimension shifted/scaled Beta laws on [1,3]:
/// Y_k = 1 + 2 B_k with B_k ~ Beta(alpha_k, beta_k).
struct BetaBox {
  Vector alpha;
  Vector beta;

  BetaBox(Vector a, Vector b);
  static BetaBox constant(int K, double a, double b);
  int dim() const { return static_cast<int>(alpha.size()); }
};

/// Joint density at y (must lie in [1,3]^K). Evaluated in log space so that
/// sharply concentrated shapes (alpha = beta = 75) stay finite on the open
/// box. On the boundary the limit value is used: 0 when the adjacent shape
/// exponent exceeds 1.
double density(const BetaBox& dist, const Parameter& y);

/// count x K matrix of i.i.d. draws, one point per row. Deterministic in the
/// seed; each call owns its generator, so concurrent callers do not share
/// state.
Matrix sample(const BetaBox& dist, Seed seed, Index count);

/// Uniform draws on [1,3]^K (the alpha = beta = 1 special case).
Matrix sample_uniform(int K, Seed seed, Index count);

}  // namespace wrom
