#pragma once

#include <string>
#include <vector>

#include "meso/assembly.hpp"

namespace meso {

// Implicit Euler trajectory of u_t = D u sampled at the requested times.
struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  double dt = 0.0;
  int refinements = 0;  // step halvings performed by the policy
  double mass_drift = 0.0;  // max relative drift of sum |V_i| u_i
  double min_value = 0.0;   // for maximum-principle monitoring
};

struct DtPolicy {
  double dt = 0.0;          // 0: start from t_end / 2000
  double rel_tol = 1e-6;    // successive-refinement target at t_end
  int max_refinements = 6;
  bool crank_nicolson = false;
};

Trajectory integrate(const SparseSymmetricOperator& stiffness, const DualVoxels& voxels,
                     const std::vector<double>& u0, double t_end,
                     const std::vector<double>& sample_times, const DtPolicy& policy = {});

// Relative error ||u - ut||_A / ||u||_A at each requested time, both systems
// stepped identically.
std::vector<double> forward_error(const SparseSymmetricOperator& s,
                                  const SparseSymmetricOperator& st,
                                  const DualVoxels& voxels, const std::vector<double>& u0,
                                  const std::vector<double>& times,
                                  const DtPolicy& policy = {});

// Mean first exit time to the boundary: S eps = -A e on interior nodes,
// eps = 0 on boundary nodes.
std::vector<double> exit_time(const SparseSymmetricOperator& stiffness,
                              const DualVoxels& voxels,
                              const std::vector<int>& boundary_nodes);

struct HittingTimeReport {
  std::vector<int> sinks;
  std::vector<double> expected;  // E[tau_i] per sink
  double E_All = 0.0;
  double E_Bnd = 0.0;
  double E_Cdet = 0.0;
  double E_Std = 0.0;
  int center_node = -1;
  double K = 0.0;
};

// E[tau_i] for a sink of strength K at `sink`, uniform start p0 = 1/|Omega|:
// stationary solve (K |V_i| e_i e_i' - S) w = A p0, E = sum |V_k| w_k.
double hitting_time(const SparseSymmetricOperator& stiffness, const DualVoxels& voxels,
                    int sink, double K);

// Time-integrated cross-check of the stationary solve (trapezoid on the
// implicit Euler transient until the survival mass is below cutoff).
double hitting_time_integrated(const SparseSymmetricOperator& stiffness,
                               const DualVoxels& voxels, int sink, double K,
                               double rel_tol = 1e-5);

// sink_spec: "all", "boundary", "center", or a node id.
HittingTimeReport hitting_report(const SparseSymmetricOperator& stiffness,
                                 const DualVoxels& voxels, const Mesh& mesh,
                                 const ElementGeometry& geom, const std::string& sink_spec,
                                 double K);

struct ShellBin {
  double r_lo = 0.0, r_hi = 0.0;
  int count = 0;
  double mean = 0.0;
};

// Mean expected hitting time over nodes binned by distance from the centroid.
// Empty shells are omitted.
std::vector<ShellBin> shell_average(const HittingTimeReport& report, const Mesh& mesh,
                                    const ElementGeometry& geom, double shell_width);

}  // namespace meso
