#ifndef XLGAP_GAP_METRICS_HPP_
#define XLGAP_GAP_METRICS_HPP_

#include <vector>

#include "xlgap/common.hpp"
#include "xlgap/types.hpp"

namespace xlgap {

// Symmetric per-language-pair matrix with a fixed diagonal convention
// (0 for relative-difference matrices, 1 for similarity matrices).
class PairwiseMatrix {
 public:
  static constexpr double kSymmetryTolerance = 1e-12;

  PairwiseMatrix(std::vector<LanguageId> languages, Matrix values,
                 double expected_diagonal);

  const std::vector<LanguageId>& languages() const { return languages_; }
  const Matrix& values() const { return values_; }
  double diagonal() const { return diagonal_; }
  Eigen::Index size() const { return values_.rows(); }

  // Mean over the n(n-1)/2 unordered off-diagonal pairs.
  double mean_offdiagonal() const;

 private:
  std::vector<LanguageId> languages_;
  Matrix values_;
  double diagonal_;
};

// Relative percentage difference between two scores:
//   |s_i - s_j| / ((s_i + s_j) / 2) * 100, in [0, 200) for positive scores.
// Requires s_i, s_j >= 0 and s_i + s_j > 0.
double rpd(double score_i, double score_j);

struct ScoreSpread {
  double std;       // sample (n-1) standard deviation of scores / 100
  double mean_rpd;  // mean rpd over all unordered pairs
};

// Table-style aggregates over a score table with at least two languages.
ScoreSpread score_spread(const ScoreTable& table);

// Linear CKA between two row-aligned feature matrices.
//
// Columns are mean-centered before evaluation unless `centered` is false;
// the value is ||Xc^T Yc||_F^2 / (||Xc^T Xc||_F ||Yc^T Yc||_F), which is 1
// for X against itself and invariant to orthogonal maps, isotropic scaling
// and column offsets of either side.
double linear_cka_matrix(const Matrix& x, const Matrix& y,
                         bool centered = true);

double linear_cka(const EmbeddingSet& x, const EmbeddingSet& y,
                  bool centered = true);

struct PairwiseCkaResult {
  PairwiseMatrix matrix;
  double mean;  // mean off-diagonal CKA
};

// CKA for every unordered language pair; sets must be row-aligned
// (same sentence count and order). Languages keep their input order.
PairwiseCkaResult pairwise_cka(const std::vector<EmbeddingSet>& sets,
                               bool centered = true);

// RPD for every unordered language pair, languages in table (code) order.
PairwiseMatrix pairwise_rpd(const ScoreTable& table);

}  // namespace xlgap

#endif  // XLGAP_GAP_METRICS_HPP_
