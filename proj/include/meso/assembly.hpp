#pragma once

#include <Eigen/Sparse>
#include <string>
#include <utility>
#include <vector>

#include "meso/field.hpp"
#include "meso/mesh.hpp"

namespace meso {

enum class OperatorRole { stiffness, generator };

// Sparse operator on the mesh edge pattern. For the stiffness role the two
// directed values per edge coincide; the generator D = A^-1 S scales rows by
// 1/|V_i| and is stored with both directions.
struct SparseSymmetricOperator {
  int n = 0;
  OperatorRole role = OperatorRole::stiffness;
  std::vector<std::pair<int, int>> edges;  // (i,j), i<j, lexicographic
  std::vector<double> value_ij;            // entry (i,j)
  std::vector<double> value_ji;            // entry (j,i)
  std::vector<double> diagonal;

  int num_edges() const { return static_cast<int>(edges.size()); }
  int find(int i, int j) const;
  // Sets diagonal_i = -sum of off-diagonals in row i.
  void recompute_diagonal();
  double max_abs_offdiag() const;
  // Largest |value_ij - value_ji| over edges.
  double asymmetry() const;
  std::vector<double> row_sums() const;
  Eigen::SparseMatrix<double> to_eigen() const;
  std::vector<double> apply(const std::vector<double>& x) const;
};

// Per-edge, per-incident-element contraction coefficients: the stiffness
// entry of edge e_ij is sum_k sum_l coeff[k][l] * gamma_k[l]. |T_k| is folded
// into the stored values so one table serves constraints and reassembly.
struct EdgeCoefficients {
  int dim = 2;
  // coeff[e] has incident_elements(e).size() * L entries, element-major.
  std::vector<std::vector<double>> coeff;

  int components() const { return dim == 2 ? 3 : 6; }
};

SparseSymmetricOperator assemble_stiffness(const Mesh& mesh, const EdgeSet& edges,
                                           const ElementGeometry& geom, double gamma);

// 2D off-diagonal entry from the opposing angles: one angle (boundary edge)
// gives cot(phi)/2, two give sin(phi+theta)/(2 sin(phi) sin(theta)).
double stiffness_entry_2d(const std::vector<double>& angles);

EdgeCoefficients edge_coefficients(const Mesh& mesh, const EdgeSet& edges,
                                   const ElementGeometry& geom);

SparseSymmetricOperator stiffness_from_gamma(const EdgeCoefficients& coeffs,
                                             const EdgeSet& edges,
                                             const ElementDiffusionField& field,
                                             int num_nodes);

// Contracted value of one edge under the field.
double contract_edge(const EdgeCoefficients& coeffs, const EdgeSet& edges, int edge_id,
                     const ElementDiffusionField& field);

SparseSymmetricOperator to_generator(const SparseSymmetricOperator& stiffness,
                                     const DualVoxels& voxels);

// Directed jump rates lambda_ji = S_ij / |V_j| (rate of j -> i jumps).
struct JumpRateMatrix {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<double> rate_ij;  // i -> j
  std::vector<double> rate_ji;  // j -> i
  std::vector<double> total_exit;  // lambda_j

  void recompute_totals();
};

// Throws Error("negative-coefficient", ...) listing edges with entries below
// -rate_epsilon; values in (-rate_epsilon, 0) are clamped to zero.
JumpRateMatrix jump_rates(const SparseSymmetricOperator& stiffness, const DualVoxels& voxels);

// Inverse of jump_rates up to clamping: S_ij from the two directed rates.
SparseSymmetricOperator stiffness_from_rates(const JumpRateMatrix& rates,
                                             const DualVoxels& voxels);

// Edges with S_ij < 0, sorted ascending by value.
std::vector<std::pair<int, double>> negative_edges(const SparseSymmetricOperator& stiffness);

double rate_epsilon(const SparseSymmetricOperator& stiffness);

}  // namespace meso
