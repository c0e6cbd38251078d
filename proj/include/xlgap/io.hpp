#ifndef XLGAP_IO_HPP_
#define XLGAP_IO_HPP_

#include <string>
#include <utility>
#include <vector>

#include "xlgap/common.hpp"
#include "xlgap/divergence.hpp"
#include "xlgap/gap_metrics.hpp"
#include "xlgap/types.hpp"

namespace xlgap {

enum class EmbeddingFormat { csv, binary };

// Embedding CSV: first line "lang=<code>,n=<int>,d=<int>", then n rows of d
// comma-separated floats. Binary: magic "XLG1", u32 n, u32 d, then n*d
// little-endian IEEE-754 32-bit floats, row-major.
EmbeddingSet load_embeddings(const std::string& path, EmbeddingFormat format);

void save_embeddings(const EmbeddingSet& set, const std::string& path,
                     EmbeddingFormat format);

// Probability CSV shares the embedding CSV layout; rows must lie on the
// probability simplex.
ProbabilitySet load_probabilities(const std::string& path);

// Score JSON: flat object, language code -> number. Duplicate keys and
// non-numeric values are parse errors.
ScoreTable load_scores(const std::string& path);

// Numeric CSV of d columns (points only). An optional non-numeric first
// line is treated as a header and skipped.
SampleSet load_points(const std::string& path);

// Numeric CSV of d+1 columns: x1,...,xd,label with binary labels.
LabeledSample load_labeled_sample(const std::string& path);

// Two-column numeric CSV for correlation input.
std::pair<std::vector<double>, std::vector<double>> load_xy(
    const std::string& path);

// Pairwise heatmap CSV: header "lang_i,lang_j,<value_column>", one row per
// unordered pair in input language order, values printed with 6 significant
// digits. The diagonal is never emitted.
void emit_heatmap(const PairwiseMatrix& matrix, const std::string& path,
                  const std::string& value_column = "cka");

// Writes `content` to `path` via a temporary file and an atomic rename, so
// failed runs leave no partial output behind.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace xlgap

#endif  // XLGAP_IO_HPP_
