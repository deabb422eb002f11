#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace simplicorpus {

struct TokenizedSentence {
  std::vector<std::string> tokens;
  std::size_t word_count = 0;
  std::size_t syllable_count = 0;
  std::size_t sentence_count = 1;
};

struct FresScore {
  double value = 0.0;
};

namespace fres_coefficients {
inline constexpr double kBase = 206.835;
inline constexpr double kSentenceLength = 1.015;
inline constexpr double kSyllablesPerWord = 84.6;
}  // namespace fres_coefficients

/// Whitespace split, then punctuation peeled off token edges one character at
/// a time. A leading apostrophe followed by one or two letters ('s, 're, 'll)
/// stays attached. Invalid UTF-8 bytes are treated as punctuation.
TokenizedSentence tokenize(std::string_view line);

/// True iff the token holds at least one Unicode letter.
bool is_word(std::string_view token);

/// Vowel-group estimate: groups of [aeiouy] after ASCII lowercasing, minus one
/// for a silent trailing "e" (not consonant+"le", only with two or more
/// groups), floored at 1.
std::size_t count_syllables(std::string_view word);

/// Throws EmptySentence when word_count is 0. Not clamped to [0, 100].
FresScore fres(const TokenizedSentence& sentence);

/// Tokenize-and-score without materializing tokens; nullopt when the line
/// has no words.
std::optional<FresScore> try_fres(std::string_view line);

/// fres(target) - fres(source).
double fres_delta(const TokenizedSentence& source, const TokenizedSentence& target);

}  // namespace simplicorpus
