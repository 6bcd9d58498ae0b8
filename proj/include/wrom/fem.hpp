#pragma once

#include <wrom/types.hpp>

#include <Eigen/SparseCholesky>

#include <functional>

namespace wrom {

/// Uniform triangulation of the unit square with homogeneous Dirichlet
/// conditions. Each grid cell is split along its lower-left to upper-right
/// diagonal, so block boundaries at multiples of 1/2 and 1/3 align with
/// element edges whenever n_per_side is divisible by 6.
struct Mesh {
  int n_per_side = 0;
  Matrix vertices;                              // (n+1)^2 x 2, row-major grid
  Eigen::MatrixX3i triangles;                   // 2 n^2 x 3, positively oriented
  Eigen::Array<bool, Eigen::Dynamic, 1> on_boundary;  // per vertex
  Eigen::ArrayXi interior_index;                // vertex -> interior dof, -1 on boundary
  int n_interior = 0;

  Index n_vertices() const { return vertices.rows(); }
  Index n_triangles() const { return triangles.rows(); }
  double h() const { return 1.0 / n_per_side; }
};

Mesh build_mesh(int n_per_side);

using TriangleMask = std::function<bool(Index)>;

/// P1 stiffness matrix on interior dofs, integrating grad u . grad v over the
/// triangles selected by the mask. The local element matrix of the 2D
/// Laplacian is scale-free, so all contributions are exact dyadic rationals
/// and masked assemblies sum entrywise-exactly to the full assembly.
SparseMatrix assemble_stiffness(const Mesh& mesh, const TriangleMask& mask);

/// Load vector for \int f v dx by the 3-point vertex rule (exact for affine
/// integrands).
Vector assemble_load(const Mesh& mesh, const std::function<double(double, double)>& f);

/// The V-inner-product matrix: the H^1_0 seminorm form, i.e. the full
/// Laplacian stiffness. SPD on interior dofs.
SparseMatrix inner_product_matrix(const Mesh& mesh);

/// Sparse direct Cholesky-type factorization of an SPD matrix, reusable for
/// many right-hand sides. Every solve is residual-checked against
/// |A x - b| <= 1e-10 |b|.
class SpdSolver {
 public:
  explicit SpdSolver(SparseMatrix matrix);
  Vector solve(const Vector& rhs) const;
  const SparseMatrix& matrix() const { return matrix_; }

 private:
  SparseMatrix matrix_;
  Eigen::SimplicialLDLT<SparseMatrix> ldlt_;
};

Vector solve_spd(const SparseMatrix& matrix, const Vector& rhs);

/// X-inner product u' X v and the induced norm.
double x_inner(const SparseMatrix& X, const Vector& u, const Vector& v);
double x_norm(const SparseMatrix& X, const Vector& u);

}  // namespace wrom
