#pragma once

#include <vector>

#include "meso/core.hpp"

namespace meso {

// One symmetric d x d diffusion matrix per element, stored as an L-vector:
//   2D (L=3): [g11, g22, g12]
//   3D (L=6): [g11, g22, g33, g12, g13, g23]
struct ElementDiffusionField {
  int dim = 2;
  std::vector<double> values;  // num_elements * L

  int components() const { return dim == 2 ? 3 : 6; }
  int num_elements() const {
    return components() == 0 ? 0 : static_cast<int>(values.size()) / components();
  }
  double* element(int k) { return values.data() + static_cast<size_t>(k) * components(); }
  const double* element(int k) const {
    return values.data() + static_cast<size_t>(k) * components();
  }

  static ElementDiffusionField isotropic(int dim, int num_elements, double gamma);
};

// Eigenvalues of the symmetric matrix of element k, ascending. Closed form
// for 2x2; Cardano for 3x3 with a cyclic-Jacobi fallback near multiple roots.
// If axis != nullptr it receives a unit eigenvector of the largest eigenvalue.
std::vector<double> field_eigenvalues(const ElementDiffusionField& field, int k,
                                      Vec3* axis = nullptr);

}  // namespace meso
