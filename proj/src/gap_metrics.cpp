#include "xlgap/gap_metrics.hpp"

#include <cmath>
#include <utility>

namespace xlgap {

PairwiseMatrix::PairwiseMatrix(std::vector<LanguageId> languages, Matrix values,
                               double expected_diagonal)
    : languages_(std::move(languages)),
      values_(std::move(values)),
      diagonal_(expected_diagonal) {
  const Eigen::Index n = values_.rows();
  if (values_.cols() != n ||
      n != static_cast<Eigen::Index>(languages_.size())) {
    throw DomainError("pairwise matrix shape does not match language count");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (values_(i, i) != diagonal_) {
      throw DomainError("pairwise matrix diagonal must equal " +
                        std::to_string(diagonal_));
    }
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (std::abs(values_(i, j) - values_(j, i)) > kSymmetryTolerance) {
        throw DomainError("pairwise matrix is not symmetric at (" +
                          std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

double PairwiseMatrix::mean_offdiagonal() const {
  const Eigen::Index n = size();
  if (n < 2) {
    throw DomainError("mean over off-diagonal pairs needs >= 2 languages");
  }
  double sum = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      sum += values_(i, j);
    }
  }
  return sum / (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
}

double rpd(double score_i, double score_j) {
  if (score_i < 0 || score_j < 0) {
    throw DomainError("rpd requires nonnegative scores");
  }
  if (score_i + score_j == 0) {
    throw DomainError("rpd undefined: both scores are zero");
  }
  return std::abs(score_i - score_j) / (0.5 * (score_i + score_j)) * 100.0;
}

ScoreSpread score_spread(const ScoreTable& table) {
  const auto& entries = table.entries();
  const std::size_t n = entries.size();
  if (n < 2) {
    throw DomainError("score spread needs at least 2 languages, got " +
                      std::to_string(n));
  }

  std::vector<double> scores;
  scores.reserve(n);
  for (const auto& [lang, score] : entries) {
    scores.push_back(score);
  }

  // Std. is reported on the fraction scale (score / 100).
  double mean = 0;
  for (double s : scores) mean += s / 100.0;
  mean /= static_cast<double>(n);
  double ss = 0;
  for (double s : scores) ss += (s / 100.0 - mean) * (s / 100.0 - mean);
  const double std_dev = std::sqrt(ss / static_cast<double>(n - 1));

  double rpd_sum = 0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      rpd_sum += rpd(scores[i], scores[j]);
      ++pairs;
    }
  }
  return {std_dev, rpd_sum / static_cast<double>(pairs)};
}

double linear_cka_matrix(const Matrix& x, const Matrix& y, bool centered) {
  if (x.rows() != y.rows()) {
    throw DomainError("linear CKA needs row-aligned inputs: " +
                      std::to_string(x.rows()) + " vs " +
                      std::to_string(y.rows()) + " rows");
  }
  Matrix xc = x;
  Matrix yc = y;
  if (centered) {
    xc.rowwise() -= x.colwise().mean();
    yc.rowwise() -= y.colwise().mean();
  }
  const double x_norm = (xc.transpose() * xc).norm();
  const double y_norm = (yc.transpose() * yc).norm();
  if (x_norm == 0 || y_norm == 0) {
    throw DomainError(centered ? "linear CKA degenerate: zero variance input"
                               : "linear CKA degenerate: zero input");
  }
  const double cross = (xc.transpose() * yc).squaredNorm();
  return cross / (x_norm * y_norm);
}

double linear_cka(const EmbeddingSet& x, const EmbeddingSet& y, bool centered) {
  if (x.rows() != y.rows()) {
    throw DomainError("linear CKA alignment error: '" + x.language().code() +
                      "' has " + std::to_string(x.rows()) + " rows, '" +
                      y.language().code() + "' has " +
                      std::to_string(y.rows()));
  }
  return linear_cka_matrix(x.matrix(), y.matrix(), centered);
}

PairwiseCkaResult pairwise_cka(const std::vector<EmbeddingSet>& sets,
                               bool centered) {
  const std::size_t n = sets.size();
  if (n < 2) {
    throw DomainError("pairwise CKA needs at least 2 languages");
  }
  const Eigen::Index rows = sets.front().rows();
  for (const auto& set : sets) {
    if (set.rows() != rows) {
      throw DomainError("pairwise CKA alignment error: '" +
                        set.language().code() + "' has " +
                        std::to_string(set.rows()) + " rows, expected " +
                        std::to_string(rows));
    }
  }

  Matrix values = Matrix::Identity(n, n);
  std::vector<LanguageId> languages;
  languages.reserve(n);
  for (const auto& set : sets) languages.push_back(set.language());

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double v;
      try {
        v = linear_cka(sets[i], sets[j], centered);
      } catch (const DomainError& e) {
        throw DomainError("pairwise CKA failed for pair (" +
                          sets[i].language().code() + ", " +
                          sets[j].language().code() + "): " + e.what());
      }
      values(i, j) = v;
      values(j, i) = v;
    }
  }
  PairwiseMatrix matrix(std::move(languages), std::move(values), 1.0);
  const double mean = matrix.mean_offdiagonal();
  return {std::move(matrix), mean};
}

PairwiseMatrix pairwise_rpd(const ScoreTable& table) {
  const auto& entries = table.entries();
  const std::size_t n = entries.size();
  if (n < 2) {
    throw DomainError("pairwise RPD needs at least 2 languages");
  }
  std::vector<LanguageId> languages;
  std::vector<double> scores;
  languages.reserve(n);
  scores.reserve(n);
  for (const auto& [lang, score] : entries) {
    languages.push_back(lang);
    scores.push_back(score);
  }
  Matrix values = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = rpd(scores[i], scores[j]);
      values(i, j) = v;
      values(j, i) = v;
    }
  }
  return PairwiseMatrix(std::move(languages), std::move(values), 0.0);
}

}  // namespace xlgap
