#include <wrom/fem.hpp>

#include <cmath>
#include <vector>

namespace wrom {

Mesh build_mesh(int n_per_side) {
  if (n_per_side < 1) throw std::invalid_argument("build_mesh: n_per_side must be >= 1");
  const int n = n_per_side;
  const int nv_side = n + 1;

  Mesh mesh;
  mesh.n_per_side = n;
  mesh.vertices.resize(Index(nv_side) * nv_side, 2);
  mesh.on_boundary.resize(Index(nv_side) * nv_side);
  mesh.interior_index.resize(Index(nv_side) * nv_side);

  int next_interior = 0;
  for (int j = 0; j < nv_side; ++j) {
    for (int i = 0; i < nv_side; ++i) {
      const Index v = Index(j) * nv_side + i;
      mesh.vertices(v, 0) = double(i) / n;
      mesh.vertices(v, 1) = double(j) / n;
      const bool boundary = (i == 0 || i == n || j == 0 || j == n);
      mesh.on_boundary(v) = boundary;
      mesh.interior_index(v) = boundary ? -1 : next_interior++;
    }
  }
  mesh.n_interior = next_interior;

  mesh.triangles.resize(Index(2) * n * n, 3);
  const auto vid = [nv_side](int i, int j) { return j * nv_side + i; };
  Index t = 0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const int v00 = vid(i, j);
      const int v10 = vid(i + 1, j);
      const int v01 = vid(i, j + 1);
      const int v11 = vid(i + 1, j + 1);
      mesh.triangles.row(t++) << v00, v10, v11;  // below the diagonal
      mesh.triangles.row(t++) << v00, v11, v01;  // above the diagonal
    }
  }
  return mesh;
}

namespace {

// Element stiffness of the 2D Laplacian is scale-free, so the two congruent
// triangle shapes of the structured mesh have constant local matrices. Using
// them keeps every assembled entry an exact multiple of 1/2, which makes
// masked assemblies sum entrywise-exactly and matrices exactly symmetric.
const Eigen::Matrix3d kLowerLocal = (Eigen::Matrix3d() <<  //
                                         0.5, -0.5, 0.0,   //
                                         -0.5, 1.0, -0.5,  //
                                         0.0, -0.5, 0.5)
                                        .finished();
const Eigen::Matrix3d kUpperLocal = (Eigen::Matrix3d() <<  //
                                         0.5, 0.0, -0.5,   //
                                         0.0, 0.5, -0.5,   //
                                         -0.5, -0.5, 1.0)
                                        .finished();

}  // namespace

SparseMatrix assemble_stiffness(const Mesh& mesh, const TriangleMask& mask) {
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(static_cast<std::size_t>(mesh.n_triangles()) * 9);
  for (Index t = 0; t < mesh.n_triangles(); ++t) {
    if (mask && !mask(t)) continue;
    const Eigen::Matrix3d& local = (t % 2 == 0) ? kLowerLocal : kUpperLocal;
    for (int a = 0; a < 3; ++a) {
      const int ia = mesh.interior_index(mesh.triangles(t, a));
      if (ia < 0) continue;
      for (int b = 0; b < 3; ++b) {
        const int ib = mesh.interior_index(mesh.triangles(t, b));
        if (ib < 0) continue;
        entries.emplace_back(ia, ib, local(a, b));
      }
    }
  }
  SparseMatrix A(mesh.n_interior, mesh.n_interior);
  A.setFromTriplets(entries.begin(), entries.end());
  A.makeCompressed();
  return A;
}

Vector assemble_load(const Mesh& mesh, const std::function<double(double, double)>& f) {
  Vector load = Vector::Zero(mesh.n_interior);
  const double third_area = mesh.h() * mesh.h() / 6.0;  // area/3, area = h^2/2
  for (Index t = 0; t < mesh.n_triangles(); ++t) {
    for (int a = 0; a < 3; ++a) {
      const Index v = mesh.triangles(t, a);
      const int ia = mesh.interior_index(v);
      if (ia < 0) continue;
      load(ia) += third_area * f(mesh.vertices(v, 0), mesh.vertices(v, 1));
    }
  }
  return load;
}

SparseMatrix inner_product_matrix(const Mesh& mesh) {
  return assemble_stiffness(mesh, TriangleMask{});
}

SpdSolver::SpdSolver(SparseMatrix matrix) : matrix_(std::move(matrix)) {
  ldlt_.compute(matrix_);
  if (ldlt_.info() != Eigen::Success)
    throw NumericalError("SpdSolver: factorization failed (matrix singular or not SPD)");
}

Vector SpdSolver::solve(const Vector& rhs) const {
  Vector x = ldlt_.solve(rhs);
  const double rhs_norm = rhs.norm();
  const double residual = (matrix_ * x - rhs).norm();
  if (!x.allFinite() || residual > 1e-10 * rhs_norm)
    throw NumericalError("SpdSolver: relative residual " + std::to_string(residual / (rhs_norm > 0 ? rhs_norm : 1.0)) +
                         " exceeds 1e-10");
  return x;
}

Vector solve_spd(const SparseMatrix& matrix, const Vector& rhs) {
  return SpdSolver(matrix).solve(rhs);
}

double x_inner(const SparseMatrix& X, const Vector& u, const Vector& v) {
  return u.dot(X * v);
}

double x_norm(const SparseMatrix& X, const Vector& u) {
  return std::sqrt(std::max(0.0, x_inner(X, u, u)));
}

}  // namespace wrom
