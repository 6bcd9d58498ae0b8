#pragma once

#include <wrom/stochastics.hpp>
#include <wrom/types.hpp>

#include <functional>

namespace wrom {

enum class Family { ClenshawCurtis, GaussLegendre, GaussJacobi };

/// Univariate quadrature rule on [1,3], nodes strictly increasing.
/// Weight normalization per family: Clenshaw-Curtis and Gauss-Legendre
/// integrate dy (weights sum to 2); Gauss-Jacobi integrates against the
/// shifted Beta density (weights sum to 1).
struct UnivariateRule {
  Family family = Family::ClenshawCurtis;
  int level = 0;
  Vector nodes;
  Vector weights;
};

/// Nested Clenshaw-Curtis rule: 1 node at level 1, 2^(i-1)+1 nodes at level
/// i >= 2, so node sets are nested across levels (bit-identical nodes, the
/// cosine arguments are canonicalized to reduced fractions).
UnivariateRule clenshaw_curtis(int level);

/// Clenshaw-Curtis rule with an arbitrary node count m >= 1 (m = 1 is the
/// midpoint rule). Non-nested linear growth, used where the node count per
/// axis must be tunable one by one.
UnivariateRule clenshaw_curtis_points(int m);

/// i-node Gauss-Legendre rule, exact for polynomials of degree <= 2i-1.
/// Built by the Golub-Welsch tridiagonal eigensolve.
UnivariateRule gauss_legendre(int level);

/// i-node Gauss rule for the shifted Beta(alpha,beta) density on [1,3]:
/// sum w_j p(x_j) = int p rho dy exactly for degree <= 2i-1. The three-term
/// recurrence is the Jacobi one with exponents (a,b) = (beta-1, alpha-1);
/// probability normalization comes out of the Golub-Welsch first eigenvector
/// components directly (their squares sum to 1).
UnivariateRule gauss_jacobi(int level, double alpha, double beta);

/// Produces the univariate rule of a given level for dimension k. Growth per
/// family: Clenshaw-Curtis nested doubling, Gauss-Legendre/Jacobi linear.
using RuleFamily = std::function<UnivariateRule(int dim, int level)>;

RuleFamily cc_family();
RuleFamily gl_family();
RuleFamily gj_family(const BetaBox& dist);

/// Multivariate rule on [1,3]^K. Smolyak weights may be negative; coincident
/// nodes are merged with summed weights.
struct MultiRule {
  enum class Kind { FullTensor, Smolyak };
  int K = 0;
  Kind kind = Kind::FullTensor;
  int order = 0;       // q: the univariate level on the axes
  Matrix nodes;        // n x K
  Vector weights;      // n, signed for Smolyak
};

/// Cartesian product of the level-q univariate rules; product weights.
/// Throws BudgetError when the node count would exceed the budget.
MultiRule full_tensor(const RuleFamily& family, int K, int q,
                      Index node_budget = kDefaultNodeBudget);

/// Smolyak sparse rule realized by the combination technique,
///   sum over L-K+1 <= |a|_1 <= L of (-1)^(L-|a|) C(K-1, L-|a|) (x)_k U_{a_k}
/// with L = q + K - 1, so q is the maximum univariate level appearing on the
/// axes and K = 1 collapses to the level-q univariate rule. Coincident nodes
/// (coordinates equal after rounding to a 1e-14 grid) are merged by summing
/// weights.
MultiRule smolyak(const RuleFamily& family, int K, int q,
                  Index node_budget = kDefaultNodeBudget);

double integrate(const MultiRule& rule, const std::function<double(const Parameter&)>& g);

}  // namespace wrom
