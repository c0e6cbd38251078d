#ifndef XLGAP_DIVERGENCE_HPP_
#define XLGAP_DIVERGENCE_HPP_

#include <cstdint>
#include <vector>

#include "xlgap/common.hpp"

namespace xlgap {

// Finite sample from one domain distribution: n x d, finite entries, n >= 1.
class SampleSet {
 public:
  explicit SampleSet(Matrix points);

  const Matrix& points() const { return points_; }
  Eigen::Index size() const { return points_.rows(); }
  Eigen::Index dim() const { return points_.cols(); }

 private:
  Matrix points_;
};

// Axis-aligned decision stump. With polarity leq_is_one the stump labels
// x[dim] <= threshold as 1, otherwise the labeling is flipped.
struct StumpHypothesis {
  Eigen::Index dim = 0;
  double threshold = 0;
  bool leq_is_one = true;

  int operator()(const Eigen::Ref<const Vector>& x) const {
    const bool leq = x[dim] <= threshold;
    return (leq == leq_is_one) ? 1 : 0;
  }
};

// Inputs of the generalization-bound complexity term.
struct BoundParams {
  int pdim = 1;        // capacity proxy of the hypothesis class, > 0
  int n = 1;           // per-domain sample size, > 0
  double delta = 0.05; // confidence parameter, in (0, 1)
};

// Finite sample with binary labels (the labeling function evaluated on it).
class LabeledSample {
 public:
  LabeledSample(Matrix points, std::vector<int> labels);

  const Matrix& points() const { return points_; }
  const std::vector<int>& labels() const { return labels_; }
  Eigen::Index size() const { return points_.rows(); }
  Eigen::Index dim() const { return points_.cols(); }
  SampleSet sample_set() const { return SampleSet(points_); }

 private:
  Matrix points_;
  std::vector<int> labels_;
};

// Empirical H-divergence over the axis-aligned stump class:
//   2 * max over stumps h of |P_A(h = 1) - P_B(h = 1)|,
// computed exactly by sweeping the midpoints of consecutive sorted
// coordinates plus +-inf sentinels in every dimension. Result in [0, 2].
double empirical_h_divergence(const SampleSet& a, const SampleSet& b);

// Empirical H-delta-H divergence over stump pairs:
//   2 * max over (h, h') of |P_A(h != h') - P_B(h != h')|.
// Enumerates all distinct threshold pairs over all dimension pairs; refuses
// instances whose enumeration exceeds `pair_budget` stump pairs. Flipping
// either polarity complements the disagreement region and leaves
// |P_A - P_B| unchanged, so one polarity per stump is swept.
double h_delta_h_divergence(const SampleSet& a, const SampleSet& b,
                            std::uint64_t pair_budget = 1'000'000);

// Sampling-complexity term 2 * sqrt((d ln(2n) + ln(2/delta)) / n).
double complexity_term(const BoundParams& p);

// Mean disagreement between the stump and the sample labels, in [0, 1].
double empirical_risk(const StumpHypothesis& h, const LabeledSample& s);

// Stump minimizing empirical risk on the sample (ties broken by lower
// dimension, then lower threshold, then leq_is_one polarity first).
StumpHypothesis fit_stump(const LabeledSample& s);

struct BoundCheck {
  double gap = 0;        // |risk_A(h) - risk_B(h)|
  double h_div = 0;      // empirical H-divergence of the point sets
  double hdh_div = 0;    // empirical H-delta-H divergence of the point sets
  double complexity = 0; // complexity_term(params)
  double bound = 0;      // hdh_div / 2 + complexity
  bool holds = false;    // gap <= bound
};

// Evaluates the empirical risk gap of h between the two labeled samples
// against the divergence bound.
BoundCheck verify_bound(const LabeledSample& a, const LabeledSample& b,
                        const StumpHypothesis& h, const BoundParams& params);

}  // namespace xlgap

#endif  // XLGAP_DIVERGENCE_HPP_
