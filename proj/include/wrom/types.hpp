#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wrom {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using SparseMatrix = Eigen::SparseMatrix<double>;

/// A point in the parameter box [1,3]^K (one coefficient per block).
using Parameter = Eigen::VectorXd;

/// Coefficients of a finite-element function, one per interior dof.
using Field = Eigen::VectorXd;

using Seed = std::uint64_t;

inline constexpr const char* kVersion = "0.1.0";

/// Default cap on multivariate quadrature node counts. Tensor grids grow as
/// m^K; the cap keeps accidental high-dimensional requests from exploding.
inline constexpr Index kDefaultNodeBudget = 10000;

/// A linear-algebra operation failed (singular matrix, residual too large,
/// degenerate weights).
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A requested construction exceeds the configured node budget.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Shortest decimal form that round-trips the value exactly; used by every
/// text writer so repeated runs are byte-comparable.
std::string format_double(double v);

}  // namespace wrom
