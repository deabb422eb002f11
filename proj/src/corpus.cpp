#include "simplicorpus/corpus.hpp"

#include <algorithm>

#include "simplicorpus/error.hpp"
#include "simplicorpus/textmetrics.hpp"
#include "unicode.hpp"

namespace simplicorpus {

LineError parse_pair_line(std::string_view line, SentencePair& out) {
  const auto tab = line.find('\t');
  if (tab == std::string_view::npos || tab == 0 || tab + 1 == line.size() ||
      line.find('\t', tab + 1) != std::string_view::npos) {
    return LineError::kMalformed;
  }
  if (!unicode::is_valid_utf8(line)) return LineError::kInvalidUtf8;
  out.source.assign(line.substr(0, tab));
  out.target.assign(line.substr(tab + 1));
  return LineError::kNone;
}

std::optional<SentencePair> PairReader::next() {
  SentencePair pair;
  while (std::getline(in_, line_)) {
    if (!line_.empty() && line_.back() == '\r') line_.pop_back();
    ++report_.read;
    switch (parse_pair_line(line_, pair)) {
      case LineError::kNone:
        pair.ordinal = ordinal_++;
        return pair;
      case LineError::kMalformed:
        ++report_.malformed;
        break;
      case LineError::kInvalidUtf8:
        ++report_.invalid_utf8;
        break;
    }
  }
  return std::nullopt;
}

bool PairReader::next_batch(std::vector<SentencePair>& batch, std::size_t max) {
  batch.clear();
  while (batch.size() < max) {
    auto pair = next();
    if (!pair) break;
    batch.push_back(std::move(*pair));
  }
  return !batch.empty();
}

std::vector<SentencePair> read_pairs(std::istream& in, ReadReport* report) {
  PairReader reader(in);
  std::vector<SentencePair> pairs;
  while (auto pair = reader.next()) pairs.push_back(std::move(*pair));
  if (report != nullptr) *report = reader.report();
  return pairs;
}

void write_pair(std::ostream& out, std::string_view source, std::string_view target) {
  out << source << '\t' << target << '\n';
}

ReservoirSampler::ReservoirSampler(std::size_t n, std::uint64_t seed)
    : capacity_(n), rng_state_(seed) {}

// splitmix64
std::uint64_t ReservoirSampler::next_u64() {
  std::uint64_t z = (rng_state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Rejection sampling on the top of the 64-bit range, exact uniform on [0, bound).
std::uint64_t ReservoirSampler::uniform_below(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next_u64();
    if (r >= threshold) return r % bound;
  }
}

void ReservoirSampler::offer(SentencePair pair) {
  ++seen_;
  if (reservoir_.size() < capacity_) {
    reservoir_.push_back(std::move(pair));
    return;
  }
  const std::uint64_t slot = uniform_below(seen_);
  if (slot < capacity_) reservoir_[slot] = std::move(pair);
}

std::vector<SentencePair> ReservoirSampler::finish() && {
  std::sort(reservoir_.begin(), reservoir_.end(),
            [](const SentencePair& a, const SentencePair& b) { return a.ordinal < b.ordinal; });
  return std::move(reservoir_);
}

std::vector<SentencePair> sample(const std::vector<SentencePair>& pairs, std::size_t n,
                                 std::uint64_t seed) {
  ReservoirSampler sampler(n, seed);
  for (const auto& pair : pairs) sampler.offer(pair);
  return std::move(sampler).finish();
}

void StatsAccumulator::add(std::string_view complex, std::string_view simple) {
  const auto c = tokenize(complex);
  const auto s = tokenize(simple);
  for (const auto& token : c.tokens) vocab_complex_.insert(unicode::to_lower(token));
  for (const auto& token : s.tokens) vocab_simple_.insert(unicode::to_lower(token));
  words_complex_ += c.word_count;
  words_simple_ += s.word_count;
  ++pairs_;
}

void StatsAccumulator::merge(const StatsAccumulator& other) {
  vocab_complex_.insert(other.vocab_complex_.begin(), other.vocab_complex_.end());
  vocab_simple_.insert(other.vocab_simple_.begin(), other.vocab_simple_.end());
  words_complex_ += other.words_complex_;
  words_simple_ += other.words_simple_;
  pairs_ += other.pairs_;
}

CorpusStats StatsAccumulator::result() const {
  if (pairs_ == 0) throw EmptyCorpus();
  CorpusStats stats;
  stats.vocab_complex = vocab_complex_.size();
  stats.vocab_simple = vocab_simple_.size();
  stats.avg_complex = static_cast<double>(words_complex_) / static_cast<double>(pairs_);
  stats.avg_simple = static_cast<double>(words_simple_) / static_cast<double>(pairs_);
  stats.total_pairs = pairs_;
  return stats;
}

CorpusStats compute_stats(const std::vector<SentencePair>& pairs) {
  StatsAccumulator acc;
  for (const auto& pair : pairs) acc.add(pair.source, pair.target);
  return acc.result();
}

}  // namespace simplicorpus
