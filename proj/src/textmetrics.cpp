#include "simplicorpus/textmetrics.hpp"

#include <optional>
#include <vector>

#include "simplicorpus/error.hpp"
#include "unicode.hpp"

namespace simplicorpus {
namespace {

using unicode::CodePoint;

bool is_edge(const CodePoint& cp) { return !cp.valid || !unicode::is_word_char(cp.value); }

bool is_apostrophe(const CodePoint& cp) {
  return cp.valid && (cp.value == U'\'' || cp.value == U'\u2019');
}

// 's 're 'll ... : apostrophe, one or two letters, then only edge characters.
bool is_clitic_start(const std::vector<CodePoint>& cps, std::size_t begin, std::size_t end) {
  if (!is_apostrophe(cps[begin])) return false;
  std::size_t i = begin + 1;
  std::size_t letters = 0;
  while (i < end && cps[i].valid && unicode::is_letter(cps[i].value)) {
    ++letters;
    ++i;
  }
  if (letters < 1 || letters > 2) return false;
  for (; i < end; ++i) {
    if (!is_edge(cps[i])) return false;
  }
  return true;
}

template <typename Emit>
void split_chunk(std::string_view chunk, std::vector<CodePoint>& cps, Emit&& emit) {
  cps.clear();
  unicode::for_each_code_point(chunk, [&](const CodePoint& cp) { cps.push_back(cp); });

  auto piece = [&](std::size_t first, std::size_t last) {
    const std::size_t from = cps[first].offset;
    const std::size_t to = cps[last - 1].offset + cps[last - 1].length;
    emit(chunk.substr(from, to - from));
  };

  std::size_t begin = 0;
  const std::size_t end = cps.size();
  while (begin < end && is_edge(cps[begin]) && !is_clitic_start(cps, begin, end)) {
    piece(begin, begin + 1);
    ++begin;
  }
  if (begin == end) return;

  std::size_t core_end = end;
  while (core_end > begin + 1 && is_edge(cps[core_end - 1])) --core_end;
  piece(begin, core_end);
  for (std::size_t i = core_end; i < end; ++i) piece(i, i + 1);
}

template <typename Emit>
void for_each_token(std::string_view line, Emit&& emit) {
  thread_local std::vector<CodePoint> cps;
  std::size_t pos = 0;
  std::size_t chunk_start = std::string_view::npos;
  while (pos < line.size()) {
    const CodePoint cp = unicode::decode_at(line, pos);
    const bool space = cp.valid && unicode::is_whitespace(cp.value);
    if (space && chunk_start != std::string_view::npos) {
      split_chunk(line.substr(chunk_start, pos - chunk_start), cps, emit);
      chunk_start = std::string_view::npos;
    } else if (!space && chunk_start == std::string_view::npos) {
      chunk_start = pos;
    }
    pos += cp.length;
  }
  if (chunk_start != std::string_view::npos) split_chunk(line.substr(chunk_start), cps, emit);
}

bool is_ascii_vowel(char c) {
  switch (c) {
    case 'a': case 'e': case 'i': case 'o': case 'u': case 'y':
      return true;
    default:
      return false;
  }
}

char ascii_lower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return static_cast<char>(cp + 32);
  return cp < 0x80 ? static_cast<char>(cp) : '\0';
}

}  // namespace

bool is_word(std::string_view token) {
  bool found = false;
  unicode::for_each_code_point(token, [&](const CodePoint& cp) {
    if (cp.valid && unicode::is_letter(cp.value)) found = true;
  });
  return found;
}

TokenizedSentence tokenize(std::string_view line) {
  TokenizedSentence sentence;
  for_each_token(line, [&](std::string_view token) {
    sentence.tokens.emplace_back(token);
    if (!is_word(token)) return;
    ++sentence.word_count;
    sentence.syllable_count += count_syllables(token);
  });
  return sentence;
}

std::optional<FresScore> try_fres(std::string_view line) {
  TokenizedSentence counts;
  for_each_token(line, [&](std::string_view token) {
    if (!is_word(token)) return;
    ++counts.word_count;
    counts.syllable_count += count_syllables(token);
  });
  if (counts.word_count == 0) return std::nullopt;
  return fres(counts);
}

std::size_t count_syllables(std::string_view word) {
  struct Slot {
    char c = '\0';  // lowercased ASCII, '\0' for anything else
    bool letter = false;
  };
  std::size_t groups = 0;
  bool in_group = false;
  bool any_letter = false;
  Slot before1;  // the two code points preceding the current one
  Slot before2;
  char last_letter = '\0';
  bool consonant_le = false;  // evaluated at the last letter
  unicode::for_each_code_point(word, [&](const CodePoint& cp) {
    const Slot here{cp.valid ? ascii_lower(cp.value) : '\0', cp.valid && unicode::is_letter(cp.value)};
    const bool vowel = is_ascii_vowel(here.c);
    if (vowel && !in_group) ++groups;
    in_group = vowel;
    if (here.letter) {
      any_letter = true;
      last_letter = here.c;
      consonant_le = before1.c == 'l' && before2.letter && !is_ascii_vowel(before2.c);
    }
    before2 = before1;
    before1 = here;
  });
  if (!any_letter) return 1;
  if (last_letter == 'e' && groups >= 2 && !consonant_le) --groups;
  return groups < 1 ? 1 : groups;
}

FresScore fres(const TokenizedSentence& sentence) {
  if (sentence.word_count == 0) throw EmptySentence();
  using namespace fres_coefficients;
  const auto words = static_cast<double>(sentence.word_count);
  const auto sentences = static_cast<double>(sentence.sentence_count);
  const auto syllables = static_cast<double>(sentence.syllable_count);
  return {kBase - kSentenceLength * (words / sentences) - kSyllablesPerWord * (syllables / words)};
}

double fres_delta(const TokenizedSentence& source, const TokenizedSentence& target) {
  return fres(target).value - fres(source).value;
}

}  // namespace simplicorpus
