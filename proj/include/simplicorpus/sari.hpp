#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace simplicorpus {

using Tokens = std::vector<std::string>;
using NgramCounts = std::map<std::vector<std::string>, std::size_t>;

inline constexpr std::size_t kSariMaxOrder = 4;

struct SariInstance {
  Tokens original;
  Tokens system;
  std::vector<Tokens> references;
};

struct SariOrderScore {
  double keep = 0.0;
  double add = 0.0;
  double del = 0.0;
};

/// All values on the 0..100 scale. Each component is the mean of its per-order
/// values and overall is the mean of the three components.
struct SariScore {
  double overall = 0.0;
  double keep_f1 = 0.0;
  double add_f1 = 0.0;
  double del_score = 0.0;
  std::array<SariOrderScore, kSariMaxOrder> per_n{};
};

enum class DeleteMode { kPrecision, kF1 };

struct SariOptions {
  DeleteMode del = DeleteMode::kPrecision;
};

/// Sliding-window n-grams with multiplicity.
NgramCounts ngram_counts(std::span<const std::string> tokens, std::size_t n);

/// Whitespace split and lowercase; the scoring-side tokenizer.
Tokens sari_tokens(std::string_view line);

/// Throws EmptyReferences.
SariScore sari_sentence(const SariInstance& inst, const SariOptions& options = {});

struct SariCorpusScore {
  SariScore mean;
  std::vector<SariScore> sentences;
};

/// Macro average over sentences. Throws EmptyCorpus, RaggedReferences or
/// EmptyReferences. Sentence scores are reduced in input order with
/// compensated summation, so the result is independent of `threads`.
SariCorpusScore sari_corpus_detailed(std::span<const SariInstance> instances,
                                     const SariOptions& options = {}, unsigned threads = 1);

SariScore sari_corpus(std::span<const SariInstance> instances, const SariOptions& options = {},
                      unsigned threads = 1);

}  // namespace simplicorpus
