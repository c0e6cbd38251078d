#include "xlgap/rank_stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace xlgap {

namespace {

void check_inputs(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw DomainError("rank statistics need equal lengths, got " +
                      std::to_string(x.size()) + " vs " +
                      std::to_string(y.size()));
  }
  if (x.size() < 3) {
    throw DomainError("rank statistics need n >= 3, got " +
                      std::to_string(x.size()));
  }
  for (double v : x) {
    if (!std::isfinite(v)) throw DomainError("non-finite value in x");
  }
  for (double v : y) {
    if (!std::isfinite(v)) throw DomainError("non-finite value in y");
  }
}

bool tied(double a, double b) { return std::abs(a - b) <= kTieEpsilon; }

// Average ranks (1-based); consecutive sorted values within kTieEpsilon
// share a rank group.
std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && tied(values[idx[j + 1]], values[idx[j]])) ++j;
    const double avg = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

struct RankMoments {
  double mean = 0;
  double scale = 0;  // sqrt(sum (r - mean)^2)
};

RankMoments moments(const std::vector<double>& ranks) {
  RankMoments m;
  for (double r : ranks) m.mean += r;
  m.mean /= static_cast<double>(ranks.size());
  double ss = 0;
  for (double r : ranks) ss += (r - m.mean) * (r - m.mean);
  m.scale = std::sqrt(ss);
  return m;
}

double pearson_of_ranks(const std::vector<double>& rx,
                        const std::vector<double>& ry, const RankMoments& mx,
                        const RankMoments& my) {
  double cross = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    cross += (rx[i] - mx.mean) * (ry[i] - my.mean);
  }
  return cross / (mx.scale * my.scale);
}

struct TieCounts {
  double pairs_tied = 0;      // sum t(t-1)/2
  double triple_term = 0;     // sum t(t-1)(t-2)
  double variance_term = 0;   // sum t(t-1)(2t+5)
};

TieCounts count_ties(std::span<const double> values) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  TieCounts out;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j + 1 < sorted.size() && tied(sorted[j + 1], sorted[j])) ++j;
    const double t = static_cast<double>(j - i + 1);
    out.pairs_tied += t * (t - 1) / 2.0;
    out.triple_term += t * (t - 1) * (t - 2);
    out.variance_term += t * (t - 1) * (2 * t + 5);
    i = j + 1;
  }
  return out;
}

struct KendallCounts {
  double concordant_minus_discordant = 0;
  double tau = 0;
};

KendallCounts kendall_statistic(std::span<const double> x,
                                std::span<const double> y) {
  const std::size_t n = x.size();
  std::int64_t concordant = 0;
  std::int64_t discordant = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (tied(x[i], x[j]) || tied(y[i], y[j])) continue;
      const bool same = (x[i] < x[j]) == (y[i] < y[j]);
      if (same) ++concordant; else ++discordant;
    }
  }
  const double n0 = static_cast<double>(n) * (static_cast<double>(n) - 1) / 2.0;
  const double n1 = count_ties(x).pairs_tied;
  const double n2 = count_ties(y).pairs_tied;
  const double denom = std::sqrt((n0 - n1) * (n0 - n2));
  if (denom == 0) {
    throw DomainError("kendall tau undefined: constant input vector");
  }
  KendallCounts out;
  out.concordant_minus_discordant = static_cast<double>(concordant - discordant);
  out.tau = out.concordant_minus_discordant / denom;
  return out;
}

// Continued fraction for the regularized incomplete beta (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 3e-14;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1;
  const double qam = a - 1;
  double c = 1;
  double d = 1 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

double regularized_incomplete_beta(double a, double b, double x) {
  if (x <= 0) return 0;
  if (x >= 1) return 1;
  const double log_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                        a * std::log(x) + b * std::log1p(-x);
  const double bt = std::exp(log_bt);
  if (x < (a + 1) / (a + b + 2)) {
    return bt * beta_continued_fraction(a, b, x) / a;
  }
  return 1 - bt * beta_continued_fraction(b, a, 1 - x) / b;
}

// Two-sided p-value of a t statistic with nu degrees of freedom.
double student_t_two_sided(double t, double nu) {
  return regularized_incomplete_beta(nu / 2.0, 0.5, nu / (nu + t * t));
}

double spearman_coefficient(std::span<const double> x,
                            std::span<const double> y) {
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const auto mx = moments(rx);
  const auto my = moments(ry);
  if (mx.scale == 0 || my.scale == 0) {
    throw DomainError("spearman undefined: constant input vector");
  }
  return pearson_of_ranks(rx, ry, mx, my);
}

double statistic_value(RankMethod method, std::span<const double> x,
                       std::span<const double> y) {
  return method == RankMethod::spearman ? spearman_coefficient(x, y)
                                        : kendall_statistic(x, y).tau;
}

double spearman_asymptotic_p(double rho, std::size_t n) {
  const double nu = static_cast<double>(n) - 2;
  if (std::abs(rho) >= 1.0) return 0.0;
  const double t = rho * std::sqrt(nu / (1 - rho * rho));
  return student_t_two_sided(t, nu);
}

// Normal approximation with tie-corrected variance of (C - D).
double kendall_asymptotic_p(std::span<const double> x,
                            std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  const auto tx = count_ties(x);
  const auto ty = count_ties(y);
  const auto stat = kendall_statistic(x, y);
  const double m = n * (n - 1);
  const double var = (m * (2 * n + 5) - tx.variance_term - ty.variance_term) / 18.0 +
                     (2 * tx.pairs_tied * ty.pairs_tied) / m +
                     tx.triple_term * ty.triple_term / (9.0 * m * (n - 2));
  if (var <= 0) {
    throw DomainError("kendall tau p-value undefined: zero variance");
  }
  const double z = stat.concordant_minus_discordant / std::sqrt(var);
  return std::erfc(std::abs(z) / std::sqrt(2.0));
}

}  // namespace

double exact_perm_pvalue(RankMethod statistic, std::span<const double> x,
                         std::span<const double> y) {
  check_inputs(x, y);
  const std::size_t n = x.size();
  if (n > kExactPermutationLimit) {
    throw SizeError("exact permutation p-value supports n <= " +
                    std::to_string(kExactPermutationLimit) + ", got " +
                    std::to_string(n));
  }
  const double observed = std::abs(statistic_value(statistic, x, y));

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> permuted(n);
  std::uint64_t hits = 0;
  std::uint64_t total = 0;
  do {
    for (std::size_t i = 0; i < n; ++i) permuted[i] = y[perm[i]];
    const double stat = std::abs(statistic_value(statistic, x, permuted));
    if (stat >= observed - 1e-12) ++hits;
    ++total;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(hits) / static_cast<double>(total);
}

CorrelationResult spearman(std::span<const double> x,
                           std::span<const double> y) {
  check_inputs(x, y);
  CorrelationResult result;
  result.method = RankMethod::spearman;
  result.coefficient = spearman_coefficient(x, y);
  if (x.size() <= kExactPermutationLimit) {
    result.p_method = PValueMethod::exact_permutation;
    result.p_value = exact_perm_pvalue(RankMethod::spearman, x, y);
  } else {
    result.p_method = PValueMethod::asymptotic;
    result.p_value = spearman_asymptotic_p(result.coefficient, x.size());
  }
  return result;
}

CorrelationResult kendall_tau_b(std::span<const double> x,
                                std::span<const double> y) {
  check_inputs(x, y);
  CorrelationResult result;
  result.method = RankMethod::kendall_tau_b;
  result.coefficient = kendall_statistic(x, y).tau;
  if (x.size() <= kExactPermutationLimit) {
    result.p_method = PValueMethod::exact_permutation;
    result.p_value = exact_perm_pvalue(RankMethod::kendall_tau_b, x, y);
  } else {
    result.p_method = PValueMethod::asymptotic;
    result.p_value = kendall_asymptotic_p(x, y);
  }
  return result;
}

std::string to_string(RankMethod m) {
  return m == RankMethod::spearman ? "spearman" : "kendall_tau_b";
}

std::string to_string(PValueMethod m) {
  return m == PValueMethod::exact_permutation ? "exact_permutation"
                                              : "asymptotic";
}

}  // namespace xlgap
