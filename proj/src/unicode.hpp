#pragma once

// Thin UTF-8 layer over ICU character properties. Internal to the library.

#include <cstddef>
#include <string>
#include <string_view>

namespace simplicorpus::unicode {

struct CodePoint {
  char32_t value = 0;
  std::size_t offset = 0;
  std::size_t length = 0;
  bool valid = false;
};

/// Decodes the code point starting at `offset`. Ill-formed sequences come back
/// with valid == false and the length of the maximal ill-formed subpart.
CodePoint decode_at(std::string_view text, std::size_t offset);

bool is_valid_utf8(std::string_view text);

bool is_letter(char32_t cp);
bool is_whitespace(char32_t cp);
/// Letters, decimal digits and combining marks.
bool is_word_char(char32_t cp);

/// Simple (1:1) lowercase mapping; ill-formed bytes are copied through.
std::string to_lower(std::string_view text);

template <typename F>
void for_each_code_point(std::string_view text, F&& f) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    const CodePoint cp = decode_at(text, pos);
    f(cp);
    pos += cp.length;
  }
}

}  // namespace simplicorpus::unicode
