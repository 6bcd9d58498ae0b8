#include <wrom/stochastics.hpp>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace wrom {

BetaBox::BetaBox(Vector a, Vector b) : alpha(std::move(a)), beta(std::move(b)) {
  if (alpha.size() != beta.size() || alpha.size() == 0)
    throw std::invalid_argument("BetaBox: alpha and beta must have equal nonzero length");
  if ((alpha.array() <= 0.0).any() || (beta.array() <= 0.0).any())
    throw std::invalid_argument("BetaBox: shape parameters must be positive");
}

BetaBox BetaBox::constant(int K, double a, double b) {
  return BetaBox(Vector::Constant(K, a), Vector::Constant(K, b));
}

double density(const BetaBox& dist, const Parameter& y) {
  const int K = dist.dim();
  if (y.size() != K) throw std::invalid_argument("density: dimension mismatch");
  if ((y.array() < 1.0).any() || (y.array() > 3.0).any())
    throw std::invalid_argument("density: point outside [1,3]^K");

  double log_rho = 0.0;
  for (int k = 0; k < K; ++k) {
    const double a = dist.alpha(k);
    const double b = dist.beta(k);
    const double t = (y(k) - 1.0) / 2.0;  // in [0,1]
    const double u = (3.0 - y(k)) / 2.0;  // 1 - t, computed from the far end
    log_rho += std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) - M_LN2;
    if (a != 1.0) {
      if (t == 0.0) return a > 1.0 ? 0.0 : std::numeric_limits<double>::infinity();
      log_rho += (a - 1.0) * std::log(t);
    }
    if (b != 1.0) {
      if (u == 0.0) return b > 1.0 ? 0.0 : std::numeric_limits<double>::infinity();
      log_rho += (b - 1.0) * std::log(u);
    }
  }
  return std::exp(log_rho);
}

Matrix sample(const BetaBox& dist, Seed seed, Index count) {
  if (count < 1) throw std::invalid_argument("sample: count must be >= 1");
  const int K = dist.dim();
  std::mt19937_64 engine(seed);
  Matrix points(count, K);
  for (Index i = 0; i < count; ++i) {
    for (int k = 0; k < K; ++k) {
      std::gamma_distribution<double> ga(dist.alpha(k), 1.0);
      std::gamma_distribution<double> gb(dist.beta(k), 1.0);
      double g1 = 0.0, g2 = 0.0;
      do {
        g1 = ga(engine);
        g2 = gb(engine);
      } while (g1 + g2 == 0.0);
      points(i, k) = 1.0 + 2.0 * (g1 / (g1 + g2));
    }
  }
  return points;
}

Matrix sample_uniform(int K, Seed seed, Index count) {
  if (K < 1) throw std::invalid_argument("sample_uniform: K must be >= 1");
  if (count < 1) throw std::invalid_argument("sample_uniform: count must be >= 1");
  std::mt19937_64 engine(seed);
  std::uniform_real_distribution<double> uni(1.0, 3.0);
  Matrix points(count, K);
  for (Index i = 0; i < count; ++i)
    for (int k = 0; k < K; ++k) points(i, k) = uni(engine);
  return points;
}

}  // namespace wrom
