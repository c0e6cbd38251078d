#ifndef XLGAP_TYPES_HPP_
#define XLGAP_TYPES_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "xlgap/common.hpp"

namespace xlgap {

// Per-language downstream scores on the paper-style percentage scale
// (0-100 for accuracy / F1). Immutable after construction.
class ScoreTable {
 public:
  ScoreTable() = default;
  explicit ScoreTable(std::map<LanguageId, double> entries);

  const std::map<LanguageId, double>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool contains(const LanguageId& lang) const { return entries_.count(lang) > 0; }
  double at(const LanguageId& lang) const;

 private:
  std::map<LanguageId, double> entries_;
};

// One language's sentence representations: n_sentences x d, finite entries.
class EmbeddingSet {
 public:
  EmbeddingSet(LanguageId language, Matrix matrix);

  const LanguageId& language() const { return language_; }
  const Matrix& matrix() const { return matrix_; }
  Eigen::Index rows() const { return matrix_.rows(); }
  Eigen::Index cols() const { return matrix_.cols(); }

 private:
  LanguageId language_;
  Matrix matrix_;
};

// Ordered token vectors for a single sentence, uniform dimension.
class TokenSequenceEmbedding {
 public:
  explicit TokenSequenceEmbedding(std::vector<Vector> tokens);

  const std::vector<Vector>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  Eigen::Index dim() const { return tokens_.front().size(); }

 private:
  std::vector<Vector> tokens_;
};

// Rows on the k-class probability simplex (each row sums to 1 within 1e-9,
// entries in [0,1]).
class ProbabilitySet {
 public:
  static constexpr double kSimplexTolerance = 1e-9;

  ProbabilitySet(LanguageId language, Matrix rows);

  const LanguageId& language() const { return language_; }
  const Matrix& rows() const { return rows_; }
  Eigen::Index size() const { return rows_.rows(); }
  Eigen::Index classes() const { return rows_.cols(); }

 private:
  LanguageId language_;
  Matrix rows_;
};

// Component-wise arithmetic mean of the token vectors.
Vector mean_pool(const TokenSequenceEmbedding& seq);

}  // namespace xlgap

#endif  // XLGAP_TYPES_HPP_
