#pragma once

#include <cstdint>
#include <string>

#include "meso/backward.hpp"
#include "meso/qp.hpp"

namespace meso {

enum class SolverPath { primal, dual };

// Minimum-backward-error coefficients: a designed stiffness together with
// the diffusion field that produced it.
struct MbeResult {
  ElementDiffusionField field;
  SparseSymmetricOperator stiffness;
  BackwardErrorReport report;
  std::string scope;  // "local" | "global"
  SolverPath path = SolverPath::dual;
  QpStatus status = QpStatus::optimal;
  int qp_solves = 0;
};

// Global design: minimize sum |T_k| ||gamma_k - gamma*I||^2 subject to a
// non-negative contracted entry on every edge. warm_start (e.g. an nnFEM
// analysis field) is optional and only used by the primal interior point.
MbeResult design_global(const EdgeCoefficients& coeffs, const EdgeSet& edges,
                        const ElementGeometry& geom, double gamma, NormChoice norm,
                        SolverPath path,
                        const ElementDiffusionField* warm_start = nullptr);

// One randomized sweep of local inequality-constrained problems; when every
// edge has been visited all contracted entries are non-negative.
MbeResult design_local(const EdgeCoefficients& coeffs, const EdgeSet& edges,
                       const ElementGeometry& geom, double gamma, NormChoice norm,
                       uint64_t order_seed);

// Rates of the designed stiffness; never raises the negative-coefficient
// error (tiny interior-point residues are clamped upstream).
JumpRateMatrix emit_rates(const MbeResult& result, const DualVoxels& voxels);

}  // namespace meso
