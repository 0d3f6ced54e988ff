#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "meso/assembly.hpp"
#include "meso/field.hpp"

namespace meso {

enum class NormChoice { frobenius, spectral };

struct BackwardErrorReport {
  double eta_2 = 0.0;  // sqrt(sum |T_k| max_j|lambda_j - gamma|^2 / |Omega|)
  double eta_F = 0.0;  // same with the Frobenius norm of gamma_k - gamma*I
  std::string scope;   // "local" | "global"
  std::vector<double> per_element_error;  // ||gamma_k - gamma*I||_2
  std::vector<uint8_t> spd;               // lambda_min > 0
  std::vector<double> eigen_ratio;        // q = lambda_min / lambda_max
  std::vector<Vec3> principal_axis;       // eigenvector of lambda_max
  double g_min = 0.0;  // min_k lambda_min
  double G_max = 0.0;  // max_k lambda_max
  double max_constraint_residual = 0.0;
  int indefinite_count = 0;
};

struct AnalysisResult {
  ElementDiffusionField field;
  BackwardErrorReport report;
};

// Backward analysis: recover a per-element diffusion field reproducing the
// repaired stiffness through the edge constraints.
AnalysisResult analyze_global(const EdgeCoefficients& coeffs, const EdgeSet& edges,
                              const ElementGeometry& geom,
                              const SparseSymmetricOperator& stiffness, double gamma,
                              NormChoice norm);

AnalysisResult analyze_local(const EdgeCoefficients& coeffs, const EdgeSet& edges,
                             const ElementGeometry& geom,
                             const SparseSymmetricOperator& stiffness, double gamma,
                             NormChoice norm, uint64_t order_seed);

// Repeated local sweeps, each warm-started from the previous field with a
// fresh edge order. Returns one result per iteration.
std::vector<AnalysisResult> iterate_local(const EdgeCoefficients& coeffs,
                                          const EdgeSet& edges, const ElementGeometry& geom,
                                          const SparseSymmetricOperator& stiffness,
                                          double gamma, NormChoice norm,
                                          uint64_t order_seed, int n_iters);

struct EtaMetrics {
  double eta_2 = 0.0;
  double eta_F = 0.0;
  std::vector<double> per_element;  // spectral deviation per element
};

EtaMetrics eta_metrics(const ElementDiffusionField& field, const ElementGeometry& geom,
                       double gamma);

// SPD flags, eigenvalue ratios, principal directions and the (g, G) bounds.
void definiteness_report(const ElementDiffusionField& field, BackwardErrorReport& report);

// Max over edges of |contract(field) - S_ij| / (1 + |S_ij|).
double constraint_residual(const EdgeCoefficients& coeffs, const EdgeSet& edges,
                           const ElementDiffusionField& field,
                           const SparseSymmetricOperator& stiffness);

}  // namespace meso
