#pragma once

#include <string>
#include <vector>

#include "meso/assembly.hpp"

namespace meso {

enum class NearnessNorm { frobenius, spectral };

// A repaired stiffness: all off-diagonals >= 0, symmetric, zero row sums.
struct RepairResult {
  std::string method;
  SparseSymmetricOperator stiffness;
  std::vector<int> changed_edges;
  int modified_count = 0;
  double max_modification = 0.0;
  // nearness only: final ||D - Dt||_2 / ||D||_2
  double rel_distance_2 = 0.0;
};

// Zero out negative off-diagonals, restore zero row sums via the diagonal.
RepairResult nnfem(const SparseSymmetricOperator& stiffness);

// Vertex-centered finite volumes on the barycentric (median) dual: entries
// are purely geometric and non-negative by construction.
RepairResult fvm(const Mesh& mesh, const EdgeSet& edges, const ElementGeometry& geom,
                 const DualVoxels& voxels, double gamma);

// Patchwise artificial viscosity: for each negative edge e_ij add |S_ij|/2 to
// every edge touching x_i or x_j (including e_ij itself, twice). Sweeps until
// no negative off-diagonal remains; aborts after 100 sweeps.
RepairResult viscosity(const SparseSymmetricOperator& stiffness, const EdgeSet& edges);

// Nearest valid generator to D in the Frobenius norm (closed-form entrywise
// projection), optionally refined by projected subgradient steps on the
// spectral norm. S is rebuilt as A*Dt and symmetrized.
RepairResult matrix_nearness(const SparseSymmetricOperator& generator,
                             const DualVoxels& voxels, NearnessNorm norm);

SparseSymmetricOperator symmetrize(const SparseSymmetricOperator& op);

// ||D - Dt||_2 / ||D||_2 by power iteration (deterministic start vector).
double relative_distance_2(const SparseSymmetricOperator& d,
                           const SparseSymmetricOperator& dt);

}  // namespace meso
