#ifndef XLGAP_TRANSPORT_HPP_
#define XLGAP_TRANSPORT_HPP_

#include <vector>

#include "xlgap/common.hpp"
#include "xlgap/types.hpp"

namespace xlgap {

struct SinkhornConfig {
  double epsilon = 0.05;   // entropic regularization weight, > 0
  int max_iters = 10000;   // > 0
  double tolerance = 1e-9; // max marginal-constraint violation, > 0
  // When true, the per-iteration marginal violation is kept in
  // TransportPlan::violation_history (diagnostics only).
  bool record_history = false;
};

struct TransportPlan {
  Matrix plan;      // n x m, nonnegative
  double cost = 0;  // <plan, C>, entropy term excluded
  int iterations = 0;
  bool converged = false;
  double marginal_violation = 0;  // max row/column marginal error at exit
  std::vector<double> violation_history;  // filled when requested
};

// Squared Euclidean distances between the rows of P and the rows of Q.
// Both sets must share the class count k.
Matrix cost_matrix(const ProbabilitySet& p, const ProbabilitySet& q);

// Entropic-regularized optimal transport between the rows of P and Q with
// uniform marginals (1/n, 1/m), solved with log-domain Sinkhorn updates.
// Non-convergence is reported through `converged`, not thrown.
TransportPlan sinkhorn(const ProbabilitySet& p, const ProbabilitySet& q,
                       const SinkhornConfig& cfg = {});

// Exact optimal transport cost for n = m <= 8 with uniform marginals, where
// OT reduces to minimum-cost assignment; solved by permutation enumeration.
double exact_ot(const ProbabilitySet& p, const ProbabilitySet& q);

}  // namespace xlgap

#endif  // XLGAP_TRANSPORT_HPP_
