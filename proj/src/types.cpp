#include "xlgap/types.hpp"

#include <cctype>
#include <utility>

namespace xlgap {

namespace {

bool lowercase_alnum(const std::string& s) {
  for (unsigned char c : s) {
    if (!(std::islower(c) || std::isdigit(c))) return false;
  }
  return true;
}

}  // namespace

LanguageId::LanguageId(std::string code) : code_(std::move(code)) {
  if (code_.empty()) {
    throw DomainError("language code must be non-empty");
  }
  if (!lowercase_alnum(code_)) {
    throw DomainError("language code must be lowercase ASCII alphanumeric: '" +
                      code_ + "'");
  }
}

ScoreTable::ScoreTable(std::map<LanguageId, double> entries)
    : entries_(std::move(entries)) {
  for (const auto& [lang, score] : entries_) {
    if (!std::isfinite(score)) {
      throw DomainError("score for '" + lang.code() + "' is not finite");
    }
  }
}

double ScoreTable::at(const LanguageId& lang) const {
  auto it = entries_.find(lang);
  if (it == entries_.end()) {
    throw DomainError("no score for language '" + lang.code() + "'");
  }
  return it->second;
}

EmbeddingSet::EmbeddingSet(LanguageId language, Matrix matrix)
    : language_(std::move(language)), matrix_(std::move(matrix)) {
  if (matrix_.rows() < 2) {
    throw DomainError("embedding set for '" + language_.code() +
                      "' needs at least 2 sentences, got " +
                      std::to_string(matrix_.rows()));
  }
  if (matrix_.cols() < 1) {
    throw DomainError("embedding set for '" + language_.code() +
                      "' needs dimension >= 1");
  }
  if (!matrix_.allFinite()) {
    throw DomainError("embedding set for '" + language_.code() +
                      "' contains non-finite entries");
  }
}

TokenSequenceEmbedding::TokenSequenceEmbedding(std::vector<Vector> tokens)
    : tokens_(std::move(tokens)) {
  if (tokens_.empty()) {
    throw DomainError("token sequence must contain at least one token");
  }
  const Eigen::Index d = tokens_.front().size();
  for (const auto& t : tokens_) {
    if (t.size() != d) {
      throw DomainError("token vectors must share one dimension");
    }
    if (!t.allFinite()) {
      throw DomainError("token vector contains non-finite entries");
    }
  }
}

ProbabilitySet::ProbabilitySet(LanguageId language, Matrix rows)
    : language_(std::move(language)), rows_(std::move(rows)) {
  if (rows_.rows() < 1 || rows_.cols() < 1) {
    throw DomainError("probability set for '" + language_.code() +
                      "' must be non-empty");
  }
  for (Eigen::Index i = 0; i < rows_.rows(); ++i) {
    double sum = 0;
    for (Eigen::Index j = 0; j < rows_.cols(); ++j) {
      const double v = rows_(i, j);
      if (!(v >= 0.0 && v <= 1.0)) {
        throw DomainError("probability set for '" + language_.code() +
                          "': entry (" + std::to_string(i) + "," +
                          std::to_string(j) + ") outside [0,1]");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kSimplexTolerance) {
      throw DomainError("probability set for '" + language_.code() + "': row " +
                        std::to_string(i) + " sums to " + std::to_string(sum));
    }
  }
}

Vector mean_pool(const TokenSequenceEmbedding& seq) {
  Vector sum = Vector::Zero(seq.dim());
  for (const auto& t : seq.tokens()) {
    sum += t;
  }
  return sum / static_cast<double>(seq.size());
}

}  // namespace xlgap
