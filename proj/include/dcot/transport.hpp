#pragma once

#include <utility>
#include <vector>

#include "dcot/types.hpp"

namespace dcot {

/// Entropic OT problem min <P, E> + (1/reg)*sum P log P over couplings with
/// the given marginals. DCOT only exercises uniform marginals (1/M each) but
/// the fields stay general.
struct TransportProblem {
  CostMatrix cost;
  Vector row_marginal;
  Vector col_marginal;
  double reg = 20.0;

  static TransportProblem uniform(CostMatrix cost, double reg);
};

struct SinkhornConfig {
  double reg = 20.0;        // used when building uniform problems
  int max_iter = 100;
  double tol = 1e-8;        // max marginal residual, infinity norm
  double min_kernel = 1e-300;  // underflow floor for the Gibbs kernel
};

/// Scaled plan P = diag(u) K diag(v), exactly by construction.
struct TransportPlan {
  Matrix plan;
  Vector scaling_u;
  Vector scaling_v;
  int iterations_used = 0;
  bool converged = false;
};

/// Exact solution of the unregularized uniform problem: (1/M) times a
/// cost-minimizing permutation matrix. Test oracle, factorial enumeration.
struct ExactUniformSolution {
  Matrix plan;
  std::vector<Index> permutation;  // permutation[i] = matched column of row i
  double objective = 0.0;          // <plan, cost>
};

/// K(i, j) = exp(-reg * cost(i, j)), clamped below at min_kernel so no row
/// or column can vanish.
Matrix gibbs_kernel(const CostMatrix& cost, double reg,
                    double min_kernel = 1e-300);

/// Sinkhorn fixed-point iteration u <- a ./ (K v), v <- b ./ (K' u) from
/// u = v = 1, stopping when both marginal residuals drop to cfg.tol or
/// cfg.max_iter is reached. Throws NonFiniteIterate if a scaling vector
/// leaves (0, inf). Uses problem.reg for the kernel.
TransportPlan sinkhorn_plan(const TransportProblem& problem,
                            const SinkhornConfig& cfg);

/// Brute force over all M! permutations, M <= 8; ties broken by the
/// lexicographically smallest permutation.
ExactUniformSolution exact_uniform_ot(const CostMatrix& cost);

/// (max |P 1 - a|, max |P' 1 - b|).
std::pair<double, double> marginal_residual(const TransportPlan& plan,
                                            const TransportProblem& problem);

}  // namespace dcot
