#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simplicorpus/corpus.hpp"
#include "simplicorpus/error.hpp"

namespace simplicorpus {

enum class Orientation { kAuto, kKeepOrder };
enum class Comparison { kStrictGreater, kGreaterEqual };

std::string_view to_string(Orientation o);
std::string_view to_string(Comparison c);

struct SelectorConfig {
  double threshold = 10.0;
  Orientation orientation = Orientation::kAuto;
  Comparison comparison = Comparison::kStrictGreater;

  /// Throws std::invalid_argument for a negative or non-finite threshold.
  void validate() const;
};

/// A pair arranged complex -> simple; delta = fres_simple - fres_complex.
struct OrientedPair {
  std::string complex;
  std::string simple;
  double fres_complex = 0.0;
  double fres_simple = 0.0;
  double delta = 0.0;
  std::uint64_t ordinal = 0;
};

struct SelectorReport {
  std::uint64_t read = 0;
  std::uint64_t kept = 0;
  std::uint64_t dropped_below_threshold = 0;
  std::uint64_t dropped_unscoreable = 0;

  SelectorReport& operator+=(const SelectorReport& other);
  friend bool operator==(const SelectorReport&, const SelectorReport&) = default;
};

class Unscoreable : public Error {
 public:
  explicit Unscoreable(std::uint64_t ordinal)
      : Error("pair " + std::to_string(ordinal) + " has a side with no words") {}
};

/// Under kAuto the lower-FRES side becomes complex (ties keep input order);
/// under kKeepOrder source is always complex. Throws Unscoreable.
OrientedPair orient(const SentencePair& pair, Orientation policy);

bool select(const OrientedPair& pair, const SelectorConfig& config);

enum class Verdict { kKept, kBelowThreshold, kUnscoreable };

/// orient + select without exceptions.
Verdict evaluate(const SentencePair& pair, const SelectorConfig& config, OrientedPair& out);

using OrientedSink = std::function<void(const OrientedPair&)>;

/// Order-preserving filter. Per-pair scoring is fanned out over `threads`
/// workers in fixed-size batches; emission order and counts do not depend on
/// the thread count.
class PseudoCorpusBuilder {
 public:
  explicit PseudoCorpusBuilder(SelectorConfig config, unsigned threads = 1);

  void process(std::span<const SentencePair> batch, const OrientedSink& sink);
  [[nodiscard]] const SelectorReport& report() const { return report_; }
  [[nodiscard]] const SelectorConfig& config() const { return config_; }

 private:
  SelectorConfig config_;
  unsigned threads_;
  SelectorReport report_;
  std::vector<Verdict> verdicts_;
  std::vector<OrientedPair> scratch_;
};

SelectorReport build_pseudo_corpus(PairReader& reader, const SelectorConfig& config,
                                   const OrientedSink& sink, unsigned threads = 1,
                                   std::size_t batch_size = 16384);

std::pair<std::vector<OrientedPair>, SelectorReport> build_pseudo_corpus(
    std::span<const SentencePair> pairs, const SelectorConfig& config, unsigned threads = 1);

/// Stats over oriented output: complex side = complex field.
CorpusStats compute_stats(std::span<const OrientedPair> pairs);

}  // namespace simplicorpus
