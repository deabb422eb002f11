#include "unicode.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace simplicorpus::unicode {

CodePoint decode_at(std::string_view text, std::size_t offset) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  auto i = static_cast<int32_t>(offset);
  UChar32 c = 0;
  U8_NEXT(bytes, i, length, c);
  CodePoint cp;
  cp.offset = offset;
  cp.length = static_cast<std::size_t>(i) - offset;
  cp.valid = c >= 0;
  cp.value = cp.valid ? static_cast<char32_t>(c) : U'\uFFFD';
  return cp;
}

bool is_valid_utf8(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (static_cast<unsigned char>(text[pos]) < 0x80) {
      ++pos;
      continue;
    }
    const CodePoint cp = decode_at(text, pos);
    if (!cp.valid) return false;
    pos += cp.length;
  }
  return true;
}

bool is_letter(char32_t cp) {
  if (cp < 0x80) return (cp | 0x20) >= 'a' && (cp | 0x20) <= 'z';
  return u_isalpha(static_cast<UChar32>(cp)) != 0;
}

bool is_whitespace(char32_t cp) {
  if (cp < 0x80) return cp == ' ' || (cp >= '\t' && cp <= '\r');
  return u_isUWhiteSpace(static_cast<UChar32>(cp)) != 0;
}

bool is_word_char(char32_t cp) {
  if (cp < 0x80) return is_letter(cp) || (cp >= '0' && cp <= '9');
  const auto mask = U_GET_GC_MASK(static_cast<UChar32>(cp));
  return (mask & (U_GC_L_MASK | U_GC_M_MASK | U_GC_ND_MASK)) != 0;
}

std::string to_lower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto byte = static_cast<unsigned char>(text[pos]);
    if (byte < 0x80) {
      out.push_back(static_cast<char>(byte >= 'A' && byte <= 'Z' ? byte + 32 : byte));
      ++pos;
      continue;
    }
    const CodePoint cp = decode_at(text, pos);
    if (!cp.valid) {
      out.append(text.substr(pos, cp.length));
    } else {
      const UChar32 lower = u_tolower(static_cast<UChar32>(cp.value));
      uint8_t buf[U8_MAX_LENGTH];
      int32_t n = 0;
      U8_APPEND_UNSAFE(buf, n, lower);
      out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(n));
    }
    pos += cp.length;
  }
  return out;
}

}  // namespace simplicorpus::unicode
