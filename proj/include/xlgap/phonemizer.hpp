#ifndef XLGAP_PHONEMIZER_HPP_
#define XLGAP_PHONEMIZER_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "xlgap/common.hpp"

namespace xlgap {

// One ordered rewrite rule: source grapheme(s) -> target IPA, optionally
// restricted by literal left/right contexts. '#' in a context matches a
// word boundary (start/end of text or adjacent whitespace). Contexts are
// checked against the input text, not the rewritten output.
struct RewriteRule {
  int order = 0;
  std::u32string source;  // non-empty
  std::u32string target;
  std::u32string left_context;   // empty = unconditional
  std::u32string right_context;  // empty = unconditional
};

// Ordered rule set for one language. Rules are kept sorted by order and
// applied leftmost-first-match with non-overlapping consumption.
class RuleTable {
 public:
  RuleTable(LanguageId language, std::vector<RewriteRule> rules);

  const LanguageId& language() const { return language_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }

 private:
  LanguageId language_;
  std::vector<RewriteRule> rules_;
};

// Set of IPA units a segmenter may emit: single symbols plus multi-character
// units (affricates, diacritic-bearing symbols). Stored NFC-composed.
class PhonemeInventory {
 public:
  explicit PhonemeInventory(std::set<std::u32string> units);

  const std::set<std::u32string>& units() const { return units_; }
  bool contains(const std::u32string& unit) const { return units_.count(unit) > 0; }
  std::size_t max_unit_length() const { return max_unit_length_; }

 private:
  std::set<std::u32string> units_;
  std::size_t max_unit_length_ = 0;
};

// Parses a rule TSV: order<TAB>source<TAB>target<TAB>left<TAB>right per
// line, '#' comments and blank lines skipped. Duplicate orders and empty
// sources are parse errors naming the line.
RuleTable load_rules(const std::string& path, const LanguageId& language);

// Parses an inventory file: one IPA unit per line, UTF-8.
PhonemeInventory load_inventory(const std::string& path);

// Grapheme-to-phoneme conversion: NFC-normalize, then scan left to right
// applying at each position the first rule (by order) whose source matches
// with satisfied contexts, consuming the source. Unmatched characters pass
// through when `passthrough` is set, otherwise raise a conversion error
// naming the code-point position.
std::string g2p(const std::string& text, const RuleTable& table,
                bool passthrough = false);

// Greedy longest-match segmentation of an IPA string into inventory units,
// left to right; matches never split a base character from its combining
// marks. The concatenation of the result equals the input. Unmatchable
// positions pass through as single units under `passthrough`, otherwise
// raise a segmentation error with the code-point offset.
std::vector<std::string> segment(const std::string& ipa,
                                 const PhonemeInventory& inv,
                                 bool passthrough = false);

// Single-space join; empty entries are errors.
std::string space_phonemes(const std::vector<std::string>& phonemes);

// g2p + segment + space_phonemes.
std::string phonemize(const std::string& text, const RuleTable& table,
                      const PhonemeInventory& inv, bool passthrough = false);

}  // namespace xlgap

#endif  // XLGAP_PHONEMIZER_HPP_
