#include "meso/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <set>

#include <json.hpp>

namespace meso {

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

uint64_t split_seed(uint64_t seed, uint64_t stream) {
  // splitmix64 on the combined state; independent streams per trajectory.
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double bounding_box_diameter(const Mesh& mesh) {
  if (mesh.nodes.empty()) return 0.0;
  Vec3 lo = mesh.nodes[0], hi = mesh.nodes[0];
  for (const auto& p : mesh.nodes)
    for (int c = 0; c < 3; ++c) {
      lo[c] = std::min(lo[c], p[c]);
      hi[c] = std::max(hi[c], p[c]);
    }
  return norm(hi - lo);
}

double volume_epsilon(const Mesh& mesh) {
  double d = bounding_box_diameter(mesh);
  return 1e-14 * std::pow(d, mesh.dim);
}

namespace {

// Signed volume: 2D cross product / 2, 3D triple product / 6.
double signed_volume(const Mesh& mesh, std::span<const int> s) {
  const Vec3& a = mesh.nodes[s[0]];
  if (mesh.dim == 2) {
    Vec3 u = mesh.nodes[s[1]] - a, v = mesh.nodes[s[2]] - a;
    return 0.5 * (u[0] * v[1] - u[1] * v[0]);
  }
  Vec3 u = mesh.nodes[s[1]] - a, v = mesh.nodes[s[2]] - a, w = mesh.nodes[s[3]] - a;
  return dot(u, cross(v, w)) / 6.0;
}

// Faces of a simplex: edges in 2D, triangles in 3D, vertex-sorted.
std::vector<std::vector<int>> simplex_faces(std::span<const int> s, int dim) {
  std::vector<std::vector<int>> faces;
  int nv = dim + 1;
  for (int skip = 0; skip < nv; ++skip) {
    std::vector<int> f;
    for (int i = 0; i < nv; ++i)
      if (i != skip) f.push_back(s[i]);
    std::sort(f.begin(), f.end());
    faces.push_back(std::move(f));
  }
  return faces;
}

}  // namespace

void validate_mesh(Mesh& mesh) {
  if (mesh.dim != 2 && mesh.dim != 3) throw Error("validate", "dim must be 2 or 3");
  const int nv = mesh.dim + 1;
  if (mesh.simplex_nodes.size() % nv != 0)
    throw Error("validate", "simplex list length not a multiple of dim+1");
  const int n = mesh.num_nodes();
  if (n == 0 || mesh.num_simplices() == 0) throw Error("validate", "empty mesh");

  const double eps = volume_epsilon(mesh);
  for (int k = 0; k < mesh.num_simplices(); ++k) {
    auto s = mesh.simplex(k);
    std::set<int> uniq;
    for (int v : s) {
      if (v < 0 || v >= n)
        throw Error("validate", "simplex " + std::to_string(k) + " has dangling node index");
      uniq.insert(v);
    }
    if (static_cast<int>(uniq.size()) != nv)
      throw Error("validate", "simplex " + std::to_string(k) + " repeats a node index");
    double vol = signed_volume(mesh, s);
    if (vol < 0) {  // fix handedness in place
      std::swap(mesh.simplex_nodes[static_cast<size_t>(k) * nv],
                mesh.simplex_nodes[static_cast<size_t>(k) * nv + 1]);
      vol = -vol;
    }
    if (vol <= eps)
      throw Error("validate", "simplex " + std::to_string(k) + " is degenerate (|T| = " +
                                  std::to_string(vol) + ")");
  }
  if (mesh.dim == 2 && mesh.nodes.size() >= 1) {
    for (const auto& p : mesh.nodes)
      if (p[2] != 0.0) throw Error("validate", "2D mesh with nonzero z coordinate");
  }

  // Boundary faces belong to exactly one simplex.
  std::map<std::vector<int>, int> face_count;
  for (int k = 0; k < mesh.num_simplices(); ++k)
    for (auto& f : simplex_faces(mesh.simplex(k), mesh.dim)) ++face_count[f];
  std::set<int> bnodes;
  for (const auto& [f, c] : face_count) {
    if (c > 2) throw Error("validate", "face shared by more than two simplices");
    if (c == 1)
      for (int v : f) bnodes.insert(v);
  }
  std::vector<int> derived(bnodes.begin(), bnodes.end());
  if (!mesh.boundary_nodes.empty() && mesh.boundary_nodes != derived)
    throw Error("validate", "declared boundary nodes disagree with face incidence");
  mesh.boundary_nodes = std::move(derived);
  mesh.node_on_boundary.assign(n, 0);
  for (int v : mesh.boundary_nodes) mesh.node_on_boundary[v] = 1;
}

Mesh load_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open mesh file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error("parse", std::string("malformed mesh JSON: ") + e.what());
  }
  Mesh mesh;
  try {
    mesh.dim = j.at("dim").get<int>();
    for (const auto& row : j.at("nodes")) {
      Vec3 p{0, 0, 0};
      if (static_cast<int>(row.size()) != mesh.dim)
        throw Error("parse", "node with wrong coordinate count");
      for (int c = 0; c < mesh.dim; ++c) p[c] = row[c].get<double>();
      mesh.nodes.push_back(p);
    }
    for (const auto& row : j.at("simplices")) {
      if (static_cast<int>(row.size()) != mesh.dim + 1)
        throw Error("parse", "simplex with wrong vertex count");
      for (const auto& v : row) mesh.simplex_nodes.push_back(v.get<int>());
    }
    if (j.contains("boundary_nodes")) {
      for (const auto& v : j["boundary_nodes"]) mesh.boundary_nodes.push_back(v.get<int>());
      std::sort(mesh.boundary_nodes.begin(), mesh.boundary_nodes.end());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error("parse", std::string("mesh JSON: ") + e.what());
  }
  validate_mesh(mesh);
  return mesh;
}

void save_mesh(const Mesh& mesh, const std::string& path) {
  nlohmann::json j;
  j["dim"] = mesh.dim;
  auto& nodes = j["nodes"] = nlohmann::json::array();
  for (const auto& p : mesh.nodes) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < mesh.dim; ++c) row.push_back(p[c]);
    nodes.push_back(row);
  }
  auto& simp = j["simplices"] = nlohmann::json::array();
  for (int k = 0; k < mesh.num_simplices(); ++k) {
    nlohmann::json row = nlohmann::json::array();
    for (int v : mesh.simplex(k)) row.push_back(v);
    simp.push_back(row);
  }
  j["boundary_nodes"] = mesh.boundary_nodes;
  std::ofstream out(path);
  if (!out) throw Error("io", "cannot write " + path);
  out << j.dump(1) << "\n";
}

int EdgeSet::find(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(i, j));
  if (it == edges.end() || *it != std::make_pair(i, j)) return -1;
  return static_cast<int>(it - edges.begin());
}

EdgeSet build_edges(const Mesh& mesh) {
  EdgeSet es;
  const int nv = mesh.dim + 1;
  std::set<std::pair<int, int>> uniq;
  for (int k = 0; k < mesh.num_simplices(); ++k) {
    auto s = mesh.simplex(k);
    for (int a = 0; a < nv; ++a)
      for (int b = a + 1; b < nv; ++b)
        uniq.insert(std::minmax(s[a], s[b]));
  }
  es.edges.assign(uniq.begin(), uniq.end());  // already lexicographic
  es.incident_elements.resize(es.edges.size());
  es.simplex_edges.resize(mesh.num_simplices());
  for (int k = 0; k < mesh.num_simplices(); ++k) {
    auto s = mesh.simplex(k);
    for (int a = 0; a < nv; ++a)
      for (int b = a + 1; b < nv; ++b) {
        int e = es.find(s[a], s[b]);
        es.incident_elements[e].push_back(k);
        es.simplex_edges[k].push_back(e);
      }
    std::sort(es.simplex_edges[k].begin(), es.simplex_edges[k].end());
  }
  es.neighborhood.resize(es.edges.size());
  for (int e = 0; e < es.num_edges(); ++e) {
    std::set<int> hood;
    for (int k : es.incident_elements[e])
      hood.insert(es.simplex_edges[k].begin(), es.simplex_edges[k].end());
    hood.insert(e);
    es.neighborhood[e].assign(hood.begin(), hood.end());
  }
  return es;
}

ElementGeometry element_geometry(const Mesh& mesh) {
  ElementGeometry g;
  g.dim = mesh.dim;
  const int nv = mesh.dim + 1;
  const double eps = volume_epsilon(mesh);
  for (int k = 0; k < mesh.num_simplices(); ++k) {
    auto s = mesh.simplex(k);
    double vol = signed_volume(mesh, s);
    if (vol <= eps)
      throw Error("validate", "degenerate simplex " + std::to_string(k) + " in geometry");
    g.volumes.push_back(vol);
    g.total_volume += vol;
    // Gradients of the hat functions: rows of the inverse edge matrix.
    const Vec3& p0 = mesh.nodes[s[0]];
    if (mesh.dim == 2) {
      Vec3 u = mesh.nodes[s[1]] - p0, v = mesh.nodes[s[2]] - p0;
      double det = u[0] * v[1] - u[1] * v[0];
      Vec3 g1{v[1] / det, -v[0] / det, 0};
      Vec3 g2{-u[1] / det, u[0] / det, 0};
      g.hat_gradients.push_back({-g1[0] - g2[0], -g1[1] - g2[1], 0});
      g.hat_gradients.push_back(g1);
      g.hat_gradients.push_back(g2);
    } else {
      Vec3 u = mesh.nodes[s[1]] - p0, v = mesh.nodes[s[2]] - p0, w = mesh.nodes[s[3]] - p0;
      double det = dot(u, cross(v, w));
      Vec3 g1 = (1.0 / det) * cross(v, w);
      Vec3 g2 = (1.0 / det) * cross(w, u);
      Vec3 g3 = (1.0 / det) * cross(u, v);
      g.hat_gradients.push_back({-g1[0] - g2[0] - g3[0], -g1[1] - g2[1] - g3[1],
                                 -g1[2] - g2[2] - g3[2]});
      g.hat_gradients.push_back(g1);
      g.hat_gradients.push_back(g2);
      g.hat_gradients.push_back(g3);
    }
    (void)nv;
  }
  return g;
}

DualVoxels dual_voxels(const Mesh& mesh, const ElementGeometry& geom) {
  DualVoxels v;
  v.volumes.assign(mesh.num_nodes(), 0.0);
  const double share = 1.0 / (mesh.dim + 1);
  for (int k = 0; k < mesh.num_simplices(); ++k)
    for (int node : mesh.simplex(k)) v.volumes[node] += geom.volumes[k] * share;
  for (double x : v.volumes) v.total += x;
  return v;
}

std::vector<double> opposing_angles(const Mesh& mesh, const EdgeSet& edges, int edge_id) {
  if (mesh.dim != 2) throw Error("dimension", "opposing_angles requires a 2D mesh");
  auto [i, j] = edges.edges[edge_id];
  std::vector<double> angles;
  for (int k : edges.incident_elements[edge_id]) {
    auto s = mesh.simplex(k);
    int opp = -1;
    for (int v : s)
      if (v != i && v != j) opp = v;
    Vec3 a = mesh.nodes[i] - mesh.nodes[opp];
    Vec3 b = mesh.nodes[j] - mesh.nodes[opp];
    double c = dot(a, b) / (norm(a) * norm(b));
    angles.push_back(std::acos(std::clamp(c, -1.0, 1.0)));
  }
  return angles;
}

std::vector<double> mesh_quality(const Mesh& mesh) {
  std::vector<double> q;
  if (mesh.dim == 2) {
    for (int k = 0; k < mesh.num_simplices(); ++k) {
      auto s = mesh.simplex(k);
      // Longest edge h3 and the angle opposite it.
      double hmax = -1.0;
      int opp = -1;
      for (int a = 0; a < 3; ++a) {
        int u = s[(a + 1) % 3], v = s[(a + 2) % 3];
        double h = norm(mesh.nodes[u] - mesh.nodes[v]);
        if (h > hmax) {
          hmax = h;
          opp = s[a];
        }
      }
      int u = -1, v = -1;
      for (int x : s)
        if (x != opp) (u < 0 ? u : v) = x;
      Vec3 a = mesh.nodes[u] - mesh.nodes[opp], b = mesh.nodes[v] - mesh.nodes[opp];
      double c = std::clamp(dot(a, b) / (norm(a) * norm(b)), -1.0, 1.0);
      q.push_back(2.0 * std::sin(std::acos(c)) / (3.0 * hmax));
    }
  } else {
    // Radius ratio 3 r_in / r_circ, 1 for the regular tetrahedron.
    ElementGeometry g = element_geometry(mesh);
    for (int k = 0; k < mesh.num_simplices(); ++k) {
      auto s = mesh.simplex(k);
      double vol = g.volumes[k];
      double area_sum = 0.0;
      for (int skip = 0; skip < 4; ++skip) {
        Vec3 p[3];
        int c = 0;
        for (int a = 0; a < 4; ++a)
          if (a != skip) p[c++] = mesh.nodes[s[a]];
        area_sum += 0.5 * norm(cross(p[1] - p[0], p[2] - p[0]));
      }
      double r_in = 3.0 * vol / area_sum;
      // Circumcenter from 2 (p_i - p_0) . c = |p_i|^2 - |p_0|^2.
      const Vec3& p0 = mesh.nodes[s[0]];
      Vec3 u = mesh.nodes[s[1]] - p0, v = mesh.nodes[s[2]] - p0, w = mesh.nodes[s[3]] - p0;
      double ru = 0.5 * dot(u, u), rv = 0.5 * dot(v, v), rw = 0.5 * dot(w, w);
      double det = dot(u, cross(v, w));
      Vec3 cc = (1.0 / det) * (ru * cross(v, w) + rv * cross(w, u) + rw * cross(u, v));
      double r_circ = norm(cc);
      q.push_back(3.0 * r_in / r_circ);
    }
  }
  return q;
}

namespace {

double uniform01(std::mt19937_64& rng) {
  return (rng() >> 11) * 0x1.0p-53;
}

// Uniform in the disc of radius r (rejection from the square).
Vec3 disc_offset(std::mt19937_64& rng, double r) {
  for (;;) {
    double x = (2.0 * uniform01(rng) - 1.0) * r;
    double y = (2.0 * uniform01(rng) - 1.0) * r;
    if (x * x + y * y <= r * r) return {x, y, 0};
  }
}

Mesh structured_square(int n) {
  Mesh mesh;
  mesh.dim = 2;
  const double h = 1.0 / n;
  for (int iy = 0; iy <= n; ++iy)
    for (int ix = 0; ix <= n; ++ix)
      mesh.nodes.push_back({-0.5 + ix * h, -0.5 + iy * h, 0});
  auto id = [n](int ix, int iy) { return iy * (n + 1) + ix; };
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      int a = id(ix, iy), b = id(ix + 1, iy), c = id(ix + 1, iy + 1), d = id(ix, iy + 1);
      mesh.simplex_nodes.insert(mesh.simplex_nodes.end(), {a, b, c});
      mesh.simplex_nodes.insert(mesh.simplex_nodes.end(), {a, c, d});
    }
  return mesh;
}

// Cotangent rule: the stiffness off-diagonal of an edge is the sum of
// cot(opposite angle)/2 over incident triangles.
bool has_negative_offdiag(const Mesh& mesh) {
  std::map<std::pair<int, int>, double> entry;
  for (int k = 0; k < mesh.num_simplices(); ++k) {
    const int* s = &mesh.simplex_nodes[static_cast<size_t>(k) * 3];
    for (int a = 0; a < 3; ++a) {
      int opp = s[a], i = s[(a + 1) % 3], j = s[(a + 2) % 3];
      Vec3 u = mesh.nodes[i] - mesh.nodes[opp], v = mesh.nodes[j] - mesh.nodes[opp];
      double cot = dot(u, v) / std::abs(u[0] * v[1] - u[1] * v[0]);
      entry[std::minmax(i, j)] += 0.5 * cot;
    }
  }
  for (const auto& [e, val] : entry)
    if (val < 0) return true;
  return false;
}

}  // namespace

Mesh generate_perturbed_square(int n, double jitter, uint64_t seed) {
  if (n < 2) throw Error("argument", "grid size must be >= 2");
  if (jitter < 0 || jitter >= 0.5) throw Error("argument", "jitter must be in [0, 0.5)");
  const double h = 1.0 / n;
  const bool need_negative = jitter >= 0.3;
  for (uint64_t attempt = 0; attempt < 100; ++attempt) {
    Mesh mesh = structured_square(n);
    std::mt19937_64 rng(split_seed(seed, attempt));
    for (int iy = 0; iy <= n; ++iy)
      for (int ix = 0; ix <= n; ++ix) {
        Vec3 off = disc_offset(rng, jitter * h);
        bool on_x = (ix == 0 || ix == n), on_y = (iy == 0 || iy == n);
        if (on_x && on_y) continue;        // corners fixed
        if (on_x) off[0] = 0;              // tangential only
        if (on_y) off[1] = 0;
        auto& p = mesh.nodes[iy * (n + 1) + ix];
        p[0] += off[0];
        p[1] += off[1];
      }
    bool valid = true;
    for (int k = 0; k < mesh.num_simplices() && valid; ++k) {
      const int* s = &mesh.simplex_nodes[static_cast<size_t>(k) * 3];
      Vec3 u = mesh.nodes[s[1]] - mesh.nodes[s[0]], v = mesh.nodes[s[2]] - mesh.nodes[s[0]];
      if (0.5 * (u[0] * v[1] - u[1] * v[0]) <= volume_epsilon(mesh)) valid = false;
    }
    if (!valid) continue;
    if (need_negative && !has_negative_offdiag(mesh)) continue;
    validate_mesh(mesh);
    return mesh;
  }
  throw Error("generate", need_negative
                              ? "no negative stiffness edge after 100 perturbation attempts"
                              : "no valid perturbed mesh after 100 attempts");
}

Mesh generate_disc(int rings) {
  if (rings < 1) throw Error("argument", "rings must be >= 1");
  Mesh mesh;
  mesh.dim = 2;
  mesh.nodes.push_back({0, 0, 0});
  std::vector<int> ring_start{0};
  for (int r = 1; r <= rings; ++r) {
    ring_start.push_back(mesh.num_nodes());
    int m = 6 * r;
    for (int a = 0; a < m; ++a) {
      double ang = 2.0 * M_PI * a / m;
      double rad = static_cast<double>(r) / rings;
      mesh.nodes.push_back({rad * std::cos(ang), rad * std::sin(ang), 0});
    }
  }
  // Stitch ring r-1 (m_in nodes) to ring r (m_out nodes) walking both rings.
  for (int r = 1; r <= rings; ++r) {
    int in0 = ring_start[r - 1], out0 = ring_start[r];
    int m_in = (r == 1) ? 1 : 6 * (r - 1), m_out = 6 * r;
    if (r == 1) {
      for (int a = 0; a < m_out; ++a)
        mesh.simplex_nodes.insert(mesh.simplex_nodes.end(),
                                  {in0, out0 + a, out0 + (a + 1) % m_out});
      continue;
    }
    int ai = 0, ao = 0;  // walked steps on inner/outer ring
    while (ai < m_in || ao < m_out) {
      // Advance whichever ring's next node trails in angle.
      double next_in = (ai + 1.0) / m_in, next_out = (ao + 1.0) / m_out;
      int vi = in0 + ai % m_in, vo = out0 + ao % m_out;
      if (ao < m_out && (next_out <= next_in || ai == m_in)) {
        mesh.simplex_nodes.insert(mesh.simplex_nodes.end(),
                                  {vi, vo, out0 + (ao + 1) % m_out});
        ++ao;
      } else {
        mesh.simplex_nodes.insert(mesh.simplex_nodes.end(),
                                  {vi, vo, in0 + (ai + 1) % m_in});
        ++ai;
      }
    }
  }
  validate_mesh(mesh);
  return mesh;
}

namespace {

Mesh structured_cube(int n) {
  Mesh mesh;
  mesh.dim = 3;
  const double h = 1.0 / n;
  auto id = [n](int ix, int iy, int iz) { return (iz * (n + 1) + iy) * (n + 1) + ix; };
  for (int iz = 0; iz <= n; ++iz)
    for (int iy = 0; iy <= n; ++iy)
      for (int ix = 0; ix <= n; ++ix)
        mesh.nodes.push_back({-0.5 + ix * h, -0.5 + iy * h, -0.5 + iz * h});
  // Six tetrahedra per cell (Kuhn split), conforming across cells.
  const int perm[6][3][3] = {
      {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}}, {{1, 0, 0}, {1, 0, 1}, {1, 1, 1}},
      {{0, 1, 0}, {1, 1, 0}, {1, 1, 1}}, {{0, 1, 0}, {0, 1, 1}, {1, 1, 1}},
      {{0, 0, 1}, {1, 0, 1}, {1, 1, 1}}, {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}}};
  for (int iz = 0; iz < n; ++iz)
    for (int iy = 0; iy < n; ++iy)
      for (int ix = 0; ix < n; ++ix) {
        int v0 = id(ix, iy, iz);
        for (const auto& t : perm) {
          mesh.simplex_nodes.push_back(v0);
          for (int c = 0; c < 3; ++c)
            mesh.simplex_nodes.push_back(id(ix + t[c][0], iy + t[c][1], iz + t[c][2]));
        }
      }
  return mesh;
}

}  // namespace

Mesh generate_cube3d(int n, double jitter, uint64_t seed) {
  if (n < 1) throw Error("argument", "grid size must be >= 1");
  Mesh mesh = structured_cube(n);
  if (jitter > 0) {
    const double h = 1.0 / n;
    std::mt19937_64 rng(seed);
    for (auto& p : mesh.nodes) {
      bool bx = std::abs(std::abs(p[0]) - 0.5) < 1e-12;
      bool by = std::abs(std::abs(p[1]) - 0.5) < 1e-12;
      bool bz = std::abs(std::abs(p[2]) - 0.5) < 1e-12;
      double dx = (2.0 * uniform01(rng) - 1.0) * jitter * h;
      double dy = (2.0 * uniform01(rng) - 1.0) * jitter * h;
      double dz = (2.0 * uniform01(rng) - 1.0) * jitter * h;
      if (!bx) p[0] += dx;
      if (!by) p[1] += dy;
      if (!bz) p[2] += dz;
    }
  }
  validate_mesh(mesh);
  return mesh;
}

Mesh generate_ball(int n) {
  Mesh mesh = structured_cube(n);
  // Radial map of the cube onto the unit ball: preserves rays, scales the
  // max-norm shell to the euclidean shell.
  for (auto& p : mesh.nodes) {
    Vec3 q{2.0 * p[0], 2.0 * p[1], 2.0 * p[2]};  // cube [-1,1]^3
    double linf = std::max({std::abs(q[0]), std::abs(q[1]), std::abs(q[2])});
    double l2 = norm(q);
    if (l2 > 0) p = (linf / l2) * q;
  }
  validate_mesh(mesh);
  return mesh;
}

Vec3 centroid(const Mesh& mesh, const ElementGeometry& geom) {
  Vec3 c{0, 0, 0};
  for (int k = 0; k < mesh.num_simplices(); ++k) {
    Vec3 bk{0, 0, 0};
    for (int v : mesh.simplex(k)) bk = bk + mesh.nodes[v];
    c = c + (geom.volumes[k] / (mesh.dim + 1)) * bk;
  }
  return (1.0 / geom.total_volume) * c;
}

int node_nearest_centroid(const Mesh& mesh, const ElementGeometry& geom) {
  Vec3 c = centroid(mesh, geom);
  int best = 0;
  double bd = norm(mesh.nodes[0] - c);
  for (int i = 1; i < mesh.num_nodes(); ++i) {
    double d = norm(mesh.nodes[i] - c);
    if (d < bd) {  // ties keep the lowest index
      bd = d;
      best = i;
    }
  }
  return best;
}

}  // namespace meso
