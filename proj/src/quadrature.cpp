#include <wrom/quadrature.hpp>

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace wrom {

namespace {

constexpr double kCenter = 2.0;  // midpoint of [1,3]; half-width is 1

// Chebyshev-extrema abscissa for index j of an (n+1)-point closed grid on
// [-1,1], ascending. The fraction j/n is reduced before the cosine call so a
// node shared by two nesting levels evaluates bit-identically, and the grid
// is exactly symmetric about 0.
double chebyshev_node(int j, int n) {
  const int jm = std::min(j, n - j);
  if (2 * jm == n) return 0.0;
  const int g = std::gcd(jm, n);
  const double v = std::cos(M_PI * (double(jm / g) / double(n / g)));
  return (j < n - j) ? -v : v;
}

}  // namespace

UnivariateRule clenshaw_curtis_points(int m) {
  if (m < 1) throw std::invalid_argument("clenshaw_curtis_points: m must be >= 1");
  UnivariateRule rule;
  rule.family = Family::ClenshawCurtis;
  rule.level = m;
  if (m == 1) {
    rule.nodes = Vector::Constant(1, kCenter);
    rule.weights = Vector::Constant(1, 2.0);
    return rule;
  }
  const int n = m - 1;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  for (int j = 0; j <= n / 2; ++j) {
    const double x = chebyshev_node(j, n);
    rule.nodes(j) = kCenter + x;
    rule.nodes(n - j) = kCenter - x;
    // Closed-rule weights via the cosine expansion of |sin|; exactness for
    // degree <= n (and all even Chebyshev modes) follows from the expansion.
    double s = 1.0;
    for (int k = 1; k <= n / 2; ++k) {
      const double b = (2 * k == n) ? 1.0 : 2.0;
      s -= b * std::cos(2.0 * M_PI * k * j / n) / (4.0 * k * k - 1.0);
    }
    const double c = (j == 0 || j == n) ? 1.0 : 2.0;
    rule.weights(j) = c * s / n;
    rule.weights(n - j) = rule.weights(j);
  }
  return rule;
}

UnivariateRule clenshaw_curtis(int level) {
  if (level < 1) throw std::invalid_argument("clenshaw_curtis: level must be >= 1");
  const int m = (level == 1) ? 1 : (1 << (level - 1)) + 1;
  UnivariateRule rule = clenshaw_curtis_points(m);
  rule.level = level;
  return rule;
}

namespace {

// Golub-Welsch: eigen-decomposition of the symmetric tridiagonal matrix built
// from the monic three-term recurrence; weights are mu0 times the squared
// first eigenvector components.
UnivariateRule golub_welsch(const Vector& diag, const Vector& offdiag, double mu0,
                            Family family, int level) {
  const Index m = diag.size();
  Matrix J = Matrix::Zero(m, m);
  for (Index k = 0; k < m; ++k) J(k, k) = diag(k);
  for (Index k = 0; k + 1 < m; ++k) J(k, k + 1) = J(k + 1, k) = offdiag(k);
  Eigen::SelfAdjointEigenSolver<Matrix> es(J);
  if (es.info() != Eigen::Success)
    throw NumericalError("golub_welsch: tridiagonal eigensolve failed");

  UnivariateRule rule;
  rule.family = family;
  rule.level = level;
  rule.nodes = es.eigenvalues().array() + kCenter;
  rule.weights = mu0 * es.eigenvectors().row(0).array().square();
  return rule;
}

}  // namespace

UnivariateRule gauss_legendre(int level) {
  if (level < 1) throw std::invalid_argument("gauss_legendre: level must be >= 1");
  const int m = level;
  Vector diag = Vector::Zero(m);
  Vector off(std::max(m - 1, 0));
  for (int k = 1; k < m; ++k) off(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
  return golub_welsch(diag, off, 2.0, Family::GaussLegendre, level);
}

UnivariateRule gauss_jacobi(int level, double alpha, double beta) {
  if (level < 1) throw std::invalid_argument("gauss_jacobi: level must be >= 1");
  if (alpha <= 0.0 || beta <= 0.0)
    throw std::invalid_argument("gauss_jacobi: shape parameters must be positive");
  // Beta(alpha,beta) mapped to [-1,1] is the Jacobi weight (1-x)^a (1+x)^b
  // with a = beta-1, b = alpha-1.
  const double a = beta - 1.0;
  const double b = alpha - 1.0;
  const int m = level;
  Vector diag(m);
  Vector off(std::max(m - 1, 0));
  diag(0) = (b - a) / (a + b + 2.0);
  for (int k = 1; k < m; ++k) {
    const double s = 2.0 * k + a + b;
    diag(k) = (b * b - a * a) / (s * (s + 2.0));
    // k = 1 uses the form with the (k+a+b) factor cancelled, which stays
    // finite at a + b = -1.
    const double off_sq =
        (k == 1) ? 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b))
                 : 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0));
    off(k - 1) = std::sqrt(off_sq);
  }
  // mu0 = 1: the weight function is the probability density itself, and the
  // squared first eigenvector components already sum to one.
  return golub_welsch(diag, off, 1.0, Family::GaussJacobi, level);
}

RuleFamily cc_family() {
  return [](int, int level) { return clenshaw_curtis(level); };
}

RuleFamily gl_family() {
  return [](int, int level) { return gauss_legendre(level); };
}

RuleFamily gj_family(const BetaBox& dist) {
  return [dist](int dim, int level) {
    return gauss_jacobi(level, dist.alpha(dim), dist.beta(dim));
  };
}

MultiRule full_tensor(const RuleFamily& family, int K, int q, Index node_budget) {
  if (K < 1 || q < 1) throw std::invalid_argument("full_tensor: K and q must be >= 1");
  std::vector<UnivariateRule> rules;
  rules.reserve(K);
  Index total = 1;
  for (int k = 0; k < K; ++k) {
    rules.push_back(family(k, q));
    const Index mk = rules.back().nodes.size();
    if (total > node_budget / mk)
      throw BudgetError("full_tensor: node count exceeds budget of " +
                        std::to_string(node_budget));
    total *= mk;
  }

  MultiRule rule;
  rule.K = K;
  rule.kind = MultiRule::Kind::FullTensor;
  rule.order = q;
  rule.nodes.resize(total, K);
  rule.weights.resize(total);
  std::vector<Index> idx(K, 0);
  for (Index r = 0; r < total; ++r) {
    double w = 1.0;
    for (int k = 0; k < K; ++k) {
      rule.nodes(r, k) = rules[k].nodes(idx[k]);
      w *= rules[k].weights(idx[k]);
    }
    rule.weights(r) = w;
    for (int k = 0; k < K; ++k) {  // odometer, first dimension fastest
      if (++idx[k] < rules[k].nodes.size()) break;
      idx[k] = 0;
    }
  }
  return rule;
}

namespace {

std::vector<std::int64_t> node_key(const Vector& y) {
  std::vector<std::int64_t> key(y.size());
  for (Index k = 0; k < y.size(); ++k) key[k] = std::llround(y(k) * 1e14);
  return key;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

MultiRule smolyak(const RuleFamily& family, int K, int q, Index node_budget) {
  if (K < 1 || q < 1) throw std::invalid_argument("smolyak: K and q must be >= 1");
  const int L = q + K - 1;

  std::vector<std::vector<UnivariateRule>> cache(K);
  for (int k = 0; k < K; ++k) {
    cache[k].reserve(q);
    for (int lev = 1; lev <= q; ++lev) cache[k].push_back(family(k, lev));
  }

  struct Entry {
    Vector node;
    double weight = 0.0;
  };
  std::map<std::vector<std::int64_t>, Entry> merged;

  std::vector<int> levels(K, 1);
  const auto add_tensor_term = [&](double coeff) {
    std::vector<Index> idx(K, 0);
    Vector node(K);
    while (true) {
      double w = coeff;
      for (int k = 0; k < K; ++k) {
        const UnivariateRule& r = cache[k][levels[k] - 1];
        node(k) = r.nodes(idx[k]);
        w *= r.weights(idx[k]);
      }
      auto [it, inserted] = merged.try_emplace(node_key(node));
      if (inserted) {
        it->second.node = node;
        if (static_cast<Index>(merged.size()) > node_budget)
          throw BudgetError("smolyak: node count exceeds budget of " +
                            std::to_string(node_budget));
      }
      it->second.weight += w;
      int k = 0;
      for (; k < K; ++k) {
        if (++idx[k] < cache[k][levels[k] - 1].nodes.size()) break;
        idx[k] = 0;
      }
      if (k == K) break;
    }
  };

  // Enumerate level multi-indices with all components in [1, q] and
  // |levels|_1 = s over the combination-technique shells.
  const int s_min = std::max(K, L - K + 1);
  for (int s = s_min; s <= L; ++s) {
    const double coeff = ((L - s) % 2 == 0 ? 1.0 : -1.0) * binomial(K - 1, L - s);
    const std::function<void(int, int)> rec = [&](int dim, int remaining) {
      if (dim == K - 1) {
        if (remaining >= 1 && remaining <= q) {
          levels[dim] = remaining;
          add_tensor_term(coeff);
        }
        return;
      }
      const int hi = std::min(q, remaining - (K - dim - 1));
      for (int lev = 1; lev <= hi; ++lev) {
        levels[dim] = lev;
        rec(dim + 1, remaining - lev);
      }
    };
    rec(0, s);
  }

  MultiRule rule;
  rule.K = K;
  rule.kind = MultiRule::Kind::Smolyak;
  rule.order = q;
  rule.nodes.resize(static_cast<Index>(merged.size()), K);
  rule.weights.resize(static_cast<Index>(merged.size()));
  Index r = 0;
  for (const auto& [key, entry] : merged) {
    rule.nodes.row(r) = entry.node.transpose();
    rule.weights(r) = entry.weight;
    ++r;
  }
  return rule;
}

double integrate(const MultiRule& rule, const std::function<double(const Parameter&)>& g) {
  double acc = 0.0;
  for (Index i = 0; i < rule.weights.size(); ++i)
    acc += rule.weights(i) * g(rule.nodes.row(i).transpose());
  return acc;
}

}  // namespace wrom
