#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fincot::text {

// Trims leading/trailing whitespace and collapses internal runs to a
// single space. Treats ASCII whitespace and U+3000 (ideographic space)
// as whitespace.
std::string normalize_whitespace(std::string_view s);

// ASCII-only lowering; multibyte sequences pass through untouched.
std::string to_lower_ascii(std::string_view s);

// Lowercased, whitespace-normalized form used as a dedup key.
std::string normalize_key(std::string_view s);

bool is_blank(std::string_view s);

// Decodes UTF-8 into code points. Invalid bytes decode to U+FFFD one
// byte at a time so counting stays total.
std::vector<uint32_t> decode_utf8(std::string_view s);

// Number of Unicode code points (the default length_fn unit).
std::size_t count_codepoints(std::string_view s);

bool is_cjk_codepoint(uint32_t cp);

// Fraction of CJK code points among CJK + ASCII alphanumeric code
// points. Returns 0 when the text has neither.
double cjk_ratio(std::string_view s);

std::vector<std::string> split_words(std::string_view s);

// Word n-grams over the lowercased, whitespace-normalized text. Empty
// when the text has fewer than n words.
std::vector<std::string> word_ngrams(std::string_view s, std::size_t n);

// Code-point n-grams over the lowercased, normalized text with spaces
// removed; used for CJK text where word boundaries are unmarked.
std::vector<std::string> char_ngrams(std::string_view s, std::size_t n);

// Candidate-answer normalization applied before exact matching: trim,
// ASCII lowercase, strip trailing punctuation, collapse whitespace, and
// drop thousands separators when the remainder is purely numeric.
std::string normalize_answer(std::string_view s);

}  // namespace fincot::text
