#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "meso/core.hpp"

namespace meso {

// Simplicial mesh: triangles (dim 2) or tetrahedra (dim 3), positively
// oriented after validation. Immutable once built.
struct Mesh {
  int dim = 2;
  std::vector<Vec3> nodes;
  std::vector<int> simplex_nodes;      // flattened, stride dim+1
  std::vector<int> boundary_nodes;     // sorted, derived from face incidence
  std::vector<uint8_t> node_on_boundary;

  int num_nodes() const { return static_cast<int>(nodes.size()); }
  int verts_per_simplex() const { return dim + 1; }
  int num_simplices() const {
    return static_cast<int>(simplex_nodes.size()) / (dim + 1);
  }
  std::span<const int> simplex(int k) const {
    return {simplex_nodes.data() + static_cast<size_t>(k) * (dim + 1),
            static_cast<size_t>(dim + 1)};
  }
};

// Edges with their incident simplices T_ij and edge neighborhoods E_ij
// (all edges of any simplex in T_ij, including the edge itself).
struct EdgeSet {
  std::vector<std::pair<int, int>> edges;            // (i,j), i<j, lexicographic
  std::vector<std::vector<int>> incident_elements;   // per edge
  std::vector<std::vector<int>> neighborhood;        // per edge, edge ids, sorted
  std::vector<std::vector<int>> simplex_edges;       // per simplex, edge ids

  int num_edges() const { return static_cast<int>(edges.size()); }
  // Index of edge {i,j}, or -1.
  int find(int i, int j) const;
};

struct ElementGeometry {
  int dim = 2;
  std::vector<double> volumes;      // |T_k|
  std::vector<Vec3> hat_gradients;  // stride dim+1, one per vertex of T_k
  double total_volume = 0.0;        // |Omega|

  std::span<const Vec3> gradients(int k) const {
    return {hat_gradients.data() + static_cast<size_t>(k) * (dim + 1),
            static_cast<size_t>(dim + 1)};
  }
};

// Lumped-mass voxel volumes |V_j| = sum of |T_k|/(d+1) over incident elements.
struct DualVoxels {
  std::vector<double> volumes;
  double total = 0.0;  // |Omega|
};

// Scale-aware degeneracy threshold: 1e-14 * diameter^dim.
double volume_epsilon(const Mesh& mesh);
double bounding_box_diameter(const Mesh& mesh);

// Validates connectivity, orientation (fixing handedness in place) and
// boundary flags. Throws Error("validate", ...).
void validate_mesh(Mesh& mesh);

Mesh load_mesh(const std::string& path);
void save_mesh(const Mesh& mesh, const std::string& path);

EdgeSet build_edges(const Mesh& mesh);
ElementGeometry element_geometry(const Mesh& mesh);
DualVoxels dual_voxels(const Mesh& mesh, const ElementGeometry& geom);

// Angles opposite edge `edge_id` in each incident triangle, in (0, pi). 2D only.
std::vector<double> opposing_angles(const Mesh& mesh, const EdgeSet& edges, int edge_id);

// Per-element quality, larger is better. 2D: Q = 2 sin(phi3) / (3 h3) with
// phi3 the angle opposite the longest edge h3. 3D: normalized radius ratio
// (reported as an extension of the 2D measure).
std::vector<double> mesh_quality(const Mesh& mesh);

// Structured triangulation of [-0.5,0.5]^2 with n x n cells and seeded node
// jitter (<= jitter*h, boundary nodes move tangentially). For jitter >= 0.3
// retries sub-seeds until the FEM stiffness has a negative off-diagonal.
Mesh generate_perturbed_square(int n, double jitter, uint64_t seed);

// Fixture generators: ring-structured unit disc (2D) and a structured
// tetrahedral unit ball / cube (3D). The ball maps a cube grid radially, so
// element quality degrades near the surface, which is the interesting case.
Mesh generate_disc(int rings);
Mesh generate_cube3d(int n, double jitter, uint64_t seed);
Mesh generate_ball(int n);

Vec3 centroid(const Mesh& mesh, const ElementGeometry& geom);
int node_nearest_centroid(const Mesh& mesh, const ElementGeometry& geom);

}  // namespace meso
