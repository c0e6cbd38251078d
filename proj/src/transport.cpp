#include "xlgap/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace xlgap {

namespace {

// log(sum_k exp(v_k)) with the usual max shift.
double log_sum_exp(const Eigen::Ref<const Vector>& v) {
  const double m = v.maxCoeff();
  if (!std::isfinite(m)) return m;  // all -inf
  double s = 0;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    s += std::exp(v[k] - m);
  }
  return m + std::log(s);
}

void check_class_count(const ProbabilitySet& p, const ProbabilitySet& q) {
  if (p.classes() != q.classes()) {
    throw DomainError("class-count mismatch: '" + p.language().code() +
                      "' has " + std::to_string(p.classes()) + " classes, '" +
                      q.language().code() + "' has " +
                      std::to_string(q.classes()));
  }
}

}  // namespace

Matrix cost_matrix(const ProbabilitySet& p, const ProbabilitySet& q) {
  check_class_count(p, q);
  const Eigen::Index n = p.size();
  const Eigen::Index m = q.size();
  Matrix c(n, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      c(i, j) = (p.rows().row(i) - q.rows().row(j)).squaredNorm();
    }
  }
  return c;
}

TransportPlan sinkhorn(const ProbabilitySet& p, const ProbabilitySet& q,
                       const SinkhornConfig& cfg) {
  if (cfg.epsilon <= 0) {
    throw DomainError("sinkhorn config: epsilon must be > 0");
  }
  if (cfg.max_iters <= 0) {
    throw DomainError("sinkhorn config: max_iters must be > 0");
  }
  if (cfg.tolerance <= 0) {
    throw DomainError("sinkhorn config: tolerance must be > 0");
  }

  const Matrix c = cost_matrix(p, q);
  const Eigen::Index n = c.rows();
  const Eigen::Index m = c.cols();
  const double eps = cfg.epsilon;
  const double log_a = -std::log(static_cast<double>(n));
  const double log_b = -std::log(static_cast<double>(m));
  const double a = 1.0 / static_cast<double>(n);
  const double b = 1.0 / static_cast<double>(m);

  Vector f = Vector::Zero(n);
  Vector g = Vector::Zero(m);
  Vector scratch(std::max(n, m));

  TransportPlan result;
  result.plan = Matrix::Zero(n, m);
  if (cfg.record_history) {
    result.violation_history.reserve(static_cast<std::size_t>(cfg.max_iters));
  }

  for (int iter = 1; iter <= cfg.max_iters; ++iter) {
    // f_i = eps log a - eps LSE_j((g_j - C_ij) / eps)
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < m; ++j) {
        scratch[j] = (g[j] - c(i, j)) / eps;
      }
      f[i] = eps * log_a - eps * log_sum_exp(scratch.head(m));
    }
    // g_j = eps log b - eps LSE_i((f_i - C_ij) / eps)
    for (Eigen::Index j = 0; j < m; ++j) {
      for (Eigen::Index i = 0; i < n; ++i) {
        scratch[i] = (f[i] - c(i, j)) / eps;
      }
      g[j] = eps * log_b - eps * log_sum_exp(scratch.head(n));
    }

    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < m; ++j) {
        result.plan(i, j) = std::exp((f[i] + g[j] - c(i, j)) / eps);
      }
    }
    double violation = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      violation = std::max(violation, std::abs(result.plan.row(i).sum() - a));
    }
    for (Eigen::Index j = 0; j < m; ++j) {
      violation = std::max(violation, std::abs(result.plan.col(j).sum() - b));
    }
    if (cfg.record_history) {
      result.violation_history.push_back(violation);
    }
    result.iterations = iter;
    result.marginal_violation = violation;
    if (violation <= cfg.tolerance) {
      result.converged = true;
      break;
    }
  }

  double cost = 0;  // row-major accumulation, entropy term excluded
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      cost += result.plan(i, j) * c(i, j);
    }
  }
  result.cost = cost;
  return result;
}

double exact_ot(const ProbabilitySet& p, const ProbabilitySet& q) {
  check_class_count(p, q);
  const Eigen::Index n = p.size();
  if (n != q.size()) {
    throw SizeError("exact OT oracle needs n = m, got " + std::to_string(n) +
                    " vs " + std::to_string(q.size()));
  }
  if (n > 8) {
    throw SizeError("exact OT oracle supports n <= 8, got " +
                    std::to_string(n));
  }
  const Matrix c = cost_matrix(p, q);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double total = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      total += c(i, perm[static_cast<std::size_t>(i)]);
    }
    best = std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best / static_cast<double>(n);
}

}  // namespace xlgap
