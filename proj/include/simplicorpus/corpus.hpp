#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace simplicorpus {

struct SentencePair {
  std::string source;
  std::string target;
  std::uint64_t ordinal = 0;

  friend bool operator==(const SentencePair&, const SentencePair&) = default;
};

enum class LineError { kNone, kMalformed, kInvalidUtf8 };

/// Parses one TSV record (no trailing newline). Exactly one tab, two
/// non-empty fields, well-formed UTF-8.
LineError parse_pair_line(std::string_view line, SentencePair& out);

struct ReadReport {
  std::uint64_t read = 0;
  std::uint64_t malformed = 0;
  std::uint64_t invalid_utf8 = 0;

  [[nodiscard]] std::uint64_t skipped() const { return malformed + invalid_utf8; }
};

/// Streams pairs out of a TSV source one line at a time. Bad lines are
/// counted and skipped; the stream never aborts on content.
class PairReader {
 public:
  explicit PairReader(std::istream& in) : in_(in) {}

  std::optional<SentencePair> next();
  /// Fills `batch` with up to `max` pairs; returns false once exhausted.
  bool next_batch(std::vector<SentencePair>& batch, std::size_t max);

  [[nodiscard]] const ReadReport& report() const { return report_; }

 private:
  std::istream& in_;
  std::string line_;
  std::uint64_t ordinal_ = 0;
  ReadReport report_;
};

std::vector<SentencePair> read_pairs(std::istream& in, ReadReport* report = nullptr);

void write_pair(std::ostream& out, std::string_view source, std::string_view target);

/// Uniform reservoir sample of min(n, size) pairs, returned in input order.
/// Output depends only on (input, n, seed).
class ReservoirSampler {
 public:
  ReservoirSampler(std::size_t n, std::uint64_t seed);

  void offer(SentencePair pair);
  [[nodiscard]] std::uint64_t seen() const { return seen_; }
  std::vector<SentencePair> finish() &&;

 private:
  std::size_t capacity_;
  std::uint64_t seen_ = 0;
  std::uint64_t rng_state_;
  std::vector<SentencePair> reservoir_;

  std::uint64_t next_u64();
  std::uint64_t uniform_below(std::uint64_t bound);
};

std::vector<SentencePair> sample(const std::vector<SentencePair>& pairs, std::size_t n,
                                 std::uint64_t seed);

struct CorpusStats {
  std::uint64_t vocab_complex = 0;
  std::uint64_t vocab_simple = 0;
  double avg_complex = 0.0;
  double avg_simple = 0.0;
  std::uint64_t total_pairs = 0;
};

/// Mergeable accumulator: vocabularies union, word counts add.
class StatsAccumulator {
 public:
  void add(std::string_view complex, std::string_view simple);
  void merge(const StatsAccumulator& other);
  /// Throws EmptyCorpus when nothing was added.
  [[nodiscard]] CorpusStats result() const;

 private:
  std::unordered_set<std::string> vocab_complex_;
  std::unordered_set<std::string> vocab_simple_;
  std::uint64_t words_complex_ = 0;
  std::uint64_t words_simple_ = 0;
  std::uint64_t pairs_ = 0;
};

CorpusStats compute_stats(const std::vector<SentencePair>& pairs);

}  // namespace simplicorpus
