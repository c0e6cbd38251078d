#ifndef XLGAP_UNICODE_HPP_
#define XLGAP_UNICODE_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace xlgap {

// Decodes UTF-8 into code points; throws ParseError on malformed bytes.
std::u32string utf8_decode(std::string_view text);

std::string utf8_encode(std::u32string_view code_points);
std::string utf8_encode(char32_t code_point);

// True for combining diacritical marks (U+0300-U+036F and the usual IPA
// combining blocks); these attach to the preceding base character when
// segmenting.
bool is_combining_mark(char32_t cp);

// Canonical composition of base + combining-mark pairs into precomposed
// characters for the Latin-script range this project ships tables for.
// Code points without a composition are left untouched.
std::u32string nfc_compose(std::u32string_view code_points);

// UTF-8 convenience wrapper around nfc_compose.
std::string nfc(std::string_view text);

}  // namespace xlgap

#endif  // XLGAP_UNICODE_HPP_
