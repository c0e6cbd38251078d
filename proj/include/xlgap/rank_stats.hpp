#ifndef XLGAP_RANK_STATS_HPP_
#define XLGAP_RANK_STATS_HPP_

#include <span>
#include <string>
#include <vector>

#include "xlgap/common.hpp"

namespace xlgap {

enum class RankMethod { spearman, kendall_tau_b };

enum class PValueMethod { exact_permutation, asymptotic };

struct CorrelationResult {
  double coefficient = 0;  // in [-1, 1]
  double p_value = 1;      // two-sided, in [0, 1]
  RankMethod method = RankMethod::spearman;
  PValueMethod p_method = PValueMethod::asymptotic;
};

// Largest n for which p-values are computed by full n! enumeration.
inline constexpr std::size_t kExactPermutationLimit = 10;

// Values within this distance are treated as tied when ranking.
inline constexpr double kTieEpsilon = 1e-12;

// Spearman's rank correlation (average ranks for ties) with a two-sided
// p-value: exact permutation enumeration for n <= 10, otherwise the
// t-distribution approximation with n-2 degrees of freedom.
CorrelationResult spearman(std::span<const double> x, std::span<const double> y);

// Kendall's tau-b with tie correction and a two-sided p-value: exact
// permutation enumeration for n <= 10, otherwise the normal approximation
// with tie-corrected variance.
CorrelationResult kendall_tau_b(std::span<const double> x,
                                std::span<const double> y);

// Two-sided exact permutation p-value for either statistic, n <= 10:
//   #{pi : |stat(x, y o pi)| >= |stat(x, y)| - 1e-12} / n!
double exact_perm_pvalue(RankMethod statistic, std::span<const double> x,
                         std::span<const double> y);

std::string to_string(RankMethod m);
std::string to_string(PValueMethod m);

}  // namespace xlgap

#endif  // XLGAP_RANK_STATS_HPP_
