#ifndef XLGAP_REPORT_HPP_
#define XLGAP_REPORT_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xlgap/common.hpp"
#include "xlgap/gap_metrics.hpp"
#include "xlgap/transport.hpp"
#include "xlgap/types.hpp"

namespace xlgap {

// Full cross-language gap report: performance-gap matrix with its spread
// aggregates, the CKA similarity matrix, and optionally a Sinkhorn distance
// matrix. Matrices are symmetric with diagonal 0 (rpd, sinkhorn) or 1 (cka).
struct GapReport {
  std::vector<LanguageId> languages;
  Matrix rpd;
  double std = 0;
  double mean_rpd = 0;
  Matrix cka;
  std::optional<Matrix> sinkhorn;
  std::map<std::string, std::string> meta;  // run configuration, stringly
};

// Throws DomainError if the report violates its shape/symmetry/diagonal
// invariants.
void validate(const GapReport& report);

// JSON with top-level keys languages, rpd, std, mean_rpd, cka, sinkhorn,
// meta in that order; doubles keep full round-trip precision. Output is
// written atomically.
void write_report(const GapReport& report, const std::string& path);

std::string report_to_json(const GapReport& report);

GapReport load_report(const std::string& path);

struct ReportInputs {
  ScoreTable scores;
  std::vector<EmbeddingSet> embeddings;               // row-aligned, >= 2
  std::vector<ProbabilitySet> probabilities;          // empty or one per language
};

struct ReportOptions {
  bool centered_cka = true;
  bool with_sinkhorn = false;
  SinkhornConfig sinkhorn_config;
  int threads = 1;  // pairwise metrics may evaluate on this many threads
};

// Computes every pairwise metric and the spread aggregates. The language
// order is the embedding input order; results are independent of the thread
// count.
GapReport build_report(const ReportInputs& inputs, const ReportOptions& opts);

}  // namespace xlgap

#endif  // XLGAP_REPORT_HPP_
