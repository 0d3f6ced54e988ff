#pragma once

#include <cstdint>
#include <vector>

#include "meso/assembly.hpp"

namespace meso {

// One exact SSA trajectory. Snapshots are the voxel counts at the requested
// times (state immediately before the first event past each time).
struct SsaTrajectory {
  std::vector<double> snapshot_times;
  std::vector<std::vector<long long>> snapshots;
  std::vector<long long> final_counts;
  double final_time = 0.0;
  long long event_count = 0;
};

SsaTrajectory ssa_run(const JumpRateMatrix& rates, const std::vector<long long>& initial,
                      double t_end, uint64_t seed,
                      const std::vector<double>& snapshot_times = {});

struct EnsembleStats {
  int trajectories = 0;
  double mean = 0.0;        // E_Cstoch
  double std_error = 0.0;   // sample std / sqrt(M)
  int capped = 0;           // trajectories dropped at the event cap
};

// Monte Carlo first hitting time of `sink` for a single molecule whose start
// voxel is sampled with probability |V_k|/|Omega|.
EnsembleStats hitting_mc(const JumpRateMatrix& rates, const DualVoxels& voxels, int sink,
                         int num_trajectories, uint64_t seed);

struct OccupancyComparison {
  std::vector<double> times;
  std::vector<std::vector<double>> mc_mean;   // concentration per time/node
  std::vector<std::vector<double>> mc_stderr;
  std::vector<std::vector<double>> ode;
  double max_z = 0.0;
};

// Ensemble mean concentrations vs. the deterministic solution of the same
// generator. Initial counts are round(u0_k * |V_k| * scale).
OccupancyComparison occupancy_vs_ode(const JumpRateMatrix& rates, const DualVoxels& voxels,
                                     const std::vector<double>& u0,
                                     const std::vector<double>& times, int num_trajectories,
                                     double scale, uint64_t seed);

}  // namespace meso
