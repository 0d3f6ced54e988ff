#pragma once

#include <Eigen/Sparse>
#include <Eigen/Dense>

namespace meso {

// Convex QP  min  x'Hx - 2 f'x  s.t.  A_eq x = b_eq,  C x >= b_ineq.
// H is diagonal (positive) unless hessian_full is set, which the dual path
// uses; all other producers keep it empty.
struct QpProblem {
  int n_var = 0;
  Eigen::VectorXd hessian_diag;  // H
  Eigen::VectorXd linear_term;   // f
  Eigen::SparseMatrix<double, Eigen::RowMajor> eq_A;
  Eigen::VectorXd eq_b;
  Eigen::SparseMatrix<double, Eigen::RowMajor> ineq_C;
  Eigen::VectorXd ineq_b;
  Eigen::SparseMatrix<double> hessian_full;  // optional, overrides hessian_diag

  bool has_full_hessian() const { return hessian_full.nonZeros() > 0; }
  double objective(const Eigen::VectorXd& x) const;
};

enum class QpStatus { optimal, infeasible, max_iter };

struct QpSolution {
  Eigen::VectorXd primal;
  Eigen::VectorXd dual_eq;    // equality multipliers
  Eigen::VectorXd dual_ineq;  // multipliers of Cx >= b, >= 0 at optimum
  double objective = 0.0;
  QpStatus status = QpStatus::optimal;
  double kkt_stationarity = 0.0;
  double kkt_feasibility = 0.0;
  double kkt_complementarity = 0.0;
  int iterations = 0;
};

// Residuals recomputed from scratch (independent of the solver loop).
void kkt_residuals(const QpProblem& p, QpSolution& s);

// Direct KKT solve for equality-constrained problems. Redundant rows are
// dropped by rank-revealing QR; inconsistent rows give status infeasible.
QpSolution solve_equality_qp(const QpProblem& p);

// Primal-dual interior point (Mehrotra predictor-corrector) for problems
// with inequality (and optionally equality) constraints.
QpSolution solve_inequality_qp(const QpProblem& p);

// Dual of  min x'Hx - 2f'x  s.t.  Cx >= 0  (H diagonal, homogeneous rhs):
//   min_{mu>=0}  mu' Ht mu + 2 ft' mu,  Ht = C H^-1 C',  ft = C H^-1 f,
// with primal recovery  x = H^-1 (f + C' mu). The dual variable is half the
// Lagrange multiplier convention of solve_inequality_qp.
struct DualQp {
  QpProblem dual;  // ineq_C = identity, full hessian Ht
  Eigen::SparseMatrix<double, Eigen::RowMajor> C;
  Eigen::VectorXd hinv;  // 1/H of the primal
  Eigen::VectorXd f;     // primal linear term
};

DualQp dualize(const QpProblem& p);
Eigen::VectorXd recover_primal(const DualQp& d, const QpSolution& dual_solution);

}  // namespace meso
