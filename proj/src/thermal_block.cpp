#include <wrom/thermal_block.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace wrom {

AffineModel build_thermal_block(Mesh mesh, int K) {
  if (K != 4 && K != 9) throw std::invalid_argument("build_thermal_block: K must be 4 or 9");
  const int side = (K == 4) ? 2 : 3;
  if (mesh.n_per_side % side != 0)
    throw std::invalid_argument("build_thermal_block: n_per_side must be divisible by " +
                                std::to_string(side) + " for K=" + std::to_string(K));

  AffineModel model;
  model.K = K;
  model.mesh = std::move(mesh);
  const Mesh& m = model.mesh;

  // Triangle-to-block assignment by barycenter; barycenters never land on a
  // subsquare boundary when side divides n_per_side.
  std::vector<int> block_of(static_cast<std::size_t>(m.n_triangles()));
  for (Index t = 0; t < m.n_triangles(); ++t) {
    double cx = 0.0, cy = 0.0;
    for (int a = 0; a < 3; ++a) {
      cx += m.vertices(m.triangles(t, a), 0);
      cy += m.vertices(m.triangles(t, a), 1);
    }
    cx /= 3.0;
    cy /= 3.0;
    const int bx = std::min(static_cast<int>(cx * side), side - 1);
    const int by = std::min(static_cast<int>(cy * side), side - 1);
    block_of[t] = by * side + bx;
  }

  model.stiffness_blocks.reserve(K);
  for (int k = 0; k < K; ++k) {
    model.stiffness_blocks.push_back(
        assemble_stiffness(m, [&block_of, k](Index t) { return block_of[t] == k; }));
  }
  model.load = assemble_load(m, [](double, double) { return 1.0; });
  model.X = inner_product_matrix(m);
  return model;
}

bool in_parameter_box(const Parameter& y) {
  return (y.array() >= kParamMin).all() && (y.array() <= kParamMax).all();
}

void require_in_box(const Parameter& y, int K) {
  if (y.size() != K)
    throw std::invalid_argument("parameter has dimension " + std::to_string(y.size()) +
                                ", expected " + std::to_string(K));
  if (!in_parameter_box(y))
    throw std::invalid_argument("parameter outside [1,3]^K");
}

SparseMatrix assemble_operator(const AffineModel& model, const Parameter& y) {
  require_in_box(y, model.K);
  SparseMatrix A = y(0) * model.stiffness_blocks[0];
  for (int k = 1; k < model.K; ++k) A += y(k) * model.stiffness_blocks[k];
  return A;
}

Field truth_solve(const AffineModel& model, const Parameter& y) {
  return solve_spd(assemble_operator(model, y), model.load);
}

double coercivity_lower_bound(const Parameter& y) {
  if (y.size() == 0 || !in_parameter_box(y))
    throw std::invalid_argument("coercivity_lower_bound: parameter outside [1,3]^K");
  return y.minCoeff();
}

}  // namespace wrom
