#include "dcot/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace dcot {

namespace {

void check_problem(const TransportProblem& p) {
  const Index m = p.cost.rows();
  if (p.cost.cols() != m) throw DimMismatch("cost matrix must be square");
  if (p.row_marginal.size() != m || p.col_marginal.size() != p.cost.cols()) {
    throw DimMismatch("marginal lengths do not match the cost matrix");
  }
  if (!(p.reg > 0.0)) throw OutOfRange("reg must be positive");
  if (!p.cost.allFinite()) throw OutOfRange("cost entries must be finite");
  for (const Vector* v : {&p.row_marginal, &p.col_marginal}) {
    if ((v->array() < 0.0).any()) {
      throw OutOfRange("marginals must be non-negative");
    }
    if (std::abs(v->sum() - 1.0) > 1e-12) {
      throw OutOfRange("marginals must sum to 1");
    }
  }
}

bool strictly_positive_finite(const Vector& v) {
  return v.allFinite() && (v.array() > 0.0).all();
}

}  // namespace

TransportProblem TransportProblem::uniform(CostMatrix cost, double reg) {
  const Index m = cost.rows();
  TransportProblem p;
  p.cost = std::move(cost);
  p.row_marginal = Vector::Constant(m, 1.0 / static_cast<double>(m));
  p.col_marginal = p.row_marginal;
  p.reg = reg;
  return p;
}

Matrix gibbs_kernel(const CostMatrix& cost, double reg, double min_kernel) {
  if (!cost.allFinite()) throw OutOfRange("cost entries must be finite");
  if (!(reg > 0.0)) throw OutOfRange("reg must be positive");
  if (!(min_kernel > 0.0)) throw OutOfRange("min_kernel must be positive");
  return (-reg * cost.array()).exp().max(min_kernel);
}

TransportPlan sinkhorn_plan(const TransportProblem& problem,
                            const SinkhornConfig& cfg) {
  check_problem(problem);
  if (cfg.max_iter < 1) throw OutOfRange("max_iter must be >= 1");
  if (!(cfg.tol > 0.0)) throw OutOfRange("tol must be positive");

  const Matrix kernel = gibbs_kernel(problem.cost, problem.reg, cfg.min_kernel);
  const Vector& a = problem.row_marginal;
  const Vector& b = problem.col_marginal;
  const Index m = kernel.rows();

  TransportPlan out;
  out.scaling_u = Vector::Ones(m);
  out.scaling_v = Vector::Ones(m);

  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    out.scaling_u = a.cwiseQuotient(kernel * out.scaling_v);
    out.scaling_v = b.cwiseQuotient(kernel.transpose() * out.scaling_u);
    if (!strictly_positive_finite(out.scaling_u) ||
        !strictly_positive_finite(out.scaling_v)) {
      throw NonFiniteIterate(
          "sinkhorn scaling left (0, inf) at iteration " +
          std::to_string(iter) + "; reg is too large for the cost scale");
    }
    out.plan = out.scaling_u.asDiagonal() * kernel *
               out.scaling_v.asDiagonal();
    out.iterations_used = iter;
    const double row_res = (out.plan.rowwise().sum() - a).cwiseAbs().maxCoeff();
    const double col_res =
        (out.plan.colwise().sum().transpose() - b).cwiseAbs().maxCoeff();
    if (row_res <= cfg.tol && col_res <= cfg.tol) {
      out.converged = true;
      break;
    }
  }
  return out;
}

ExactUniformSolution exact_uniform_ot(const CostMatrix& cost) {
  const Index m = cost.rows();
  if (cost.cols() != m) throw DimMismatch("cost matrix must be square");
  if (m > 8) {
    throw TooLarge("exact_uniform_ot enumerates permutations; M <= 8 only");
  }
  if (m < 1) throw OutOfRange("empty cost matrix");

  std::vector<Index> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), Index{0});
  std::vector<Index> best = perm;
  double best_sum = std::numeric_limits<double>::infinity();
  do {
    double sum = 0.0;
    for (Index i = 0; i < m; ++i) sum += cost(i, perm[static_cast<std::size_t>(i)]);
    // Strict improvement keeps the lexicographically smallest tie winner.
    if (sum < best_sum) {
      best_sum = sum;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  ExactUniformSolution out;
  out.permutation = best;
  out.plan = Matrix::Zero(m, m);
  const double mass = 1.0 / static_cast<double>(m);
  for (Index i = 0; i < m; ++i) out.plan(i, best[static_cast<std::size_t>(i)]) = mass;
  out.objective = best_sum * mass;
  return out;
}

std::pair<double, double> marginal_residual(const TransportPlan& plan,
                                            const TransportProblem& problem) {
  if (plan.plan.rows() != problem.row_marginal.size() ||
      plan.plan.cols() != problem.col_marginal.size()) {
    throw DimMismatch("plan shape does not match the problem marginals");
  }
  const double row_res =
      (plan.plan.rowwise().sum() - problem.row_marginal).cwiseAbs().maxCoeff();
  const double col_res = (plan.plan.colwise().sum().transpose() -
                          problem.col_marginal)
                             .cwiseAbs()
                             .maxCoeff();
  return {row_res, col_res};
}

}  // namespace dcot
