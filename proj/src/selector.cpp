#include "simplicorpus/selector.hpp"

#include <cmath>
#include <stdexcept>

#include "simplicorpus/parallel.hpp"
#include "simplicorpus/textmetrics.hpp"

namespace simplicorpus {

std::string_view to_string(Orientation o) {
  return o == Orientation::kAuto ? "auto" : "keep_order";
}

std::string_view to_string(Comparison c) {
  return c == Comparison::kStrictGreater ? "gt" : "ge";
}

void SelectorConfig::validate() const {
  if (!std::isfinite(threshold) || threshold < 0.0) {
    throw std::invalid_argument("threshold must be a finite value >= 0");
  }
}

SelectorReport& SelectorReport::operator+=(const SelectorReport& other) {
  read += other.read;
  kept += other.kept;
  dropped_below_threshold += other.dropped_below_threshold;
  dropped_unscoreable += other.dropped_unscoreable;
  return *this;
}

namespace {

// Scores and direction of one pair, before any strings are copied.
struct Scored {
  double fres_source = 0.0;
  double fres_target = 0.0;
  bool swap = false;
};

bool score(const SentencePair& pair, Orientation policy, Scored& out) {
  const auto source = try_fres(pair.source);
  if (!source) return false;
  const auto target = try_fres(pair.target);
  if (!target) return false;
  out.fres_source = source->value;
  out.fres_target = target->value;
  out.swap = policy == Orientation::kAuto && out.fres_target < out.fres_source;
  return true;
}

double delta_of(const Scored& s) {
  return s.swap ? s.fres_source - s.fres_target : s.fres_target - s.fres_source;
}

bool passes(double delta, const SelectorConfig& config) {
  if (config.comparison == Comparison::kGreaterEqual) return delta >= config.threshold;
  return delta > config.threshold;
}

OrientedPair materialize(const SentencePair& pair, const Scored& s) {
  OrientedPair out;
  out.ordinal = pair.ordinal;
  if (s.swap) {
    out.complex = pair.target;
    out.simple = pair.source;
    out.fres_complex = s.fres_target;
    out.fres_simple = s.fres_source;
  } else {
    out.complex = pair.source;
    out.simple = pair.target;
    out.fres_complex = s.fres_source;
    out.fres_simple = s.fres_target;
  }
  out.delta = out.fres_simple - out.fres_complex;
  return out;
}

Verdict judge(const SentencePair& pair, const SelectorConfig& config, Scored& scored) {
  if (!score(pair, config.orientation, scored)) return Verdict::kUnscoreable;
  return passes(delta_of(scored), config) ? Verdict::kKept : Verdict::kBelowThreshold;
}

}  // namespace

OrientedPair orient(const SentencePair& pair, Orientation policy) {
  Scored scored;
  if (!score(pair, policy, scored)) throw Unscoreable(pair.ordinal);
  return materialize(pair, scored);
}

bool select(const OrientedPair& pair, const SelectorConfig& config) { return passes(pair.delta, config); }

Verdict evaluate(const SentencePair& pair, const SelectorConfig& config, OrientedPair& out) {
  Scored scored;
  const Verdict verdict = judge(pair, config, scored);
  if (verdict != Verdict::kUnscoreable) out = materialize(pair, scored);
  return verdict;
}

PseudoCorpusBuilder::PseudoCorpusBuilder(SelectorConfig config, unsigned threads)
    : config_(config), threads_(threads == 0 ? 1 : threads) {
  config_.validate();
}

void PseudoCorpusBuilder::process(std::span<const SentencePair> batch, const OrientedSink& sink) {
  verdicts_.assign(batch.size(), Verdict::kUnscoreable);
  scratch_.resize(batch.size());
  parallel_for(batch.size(), threads_, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      Scored scored;
      verdicts_[i] = judge(batch[i], config_, scored);
      if (verdicts_[i] == Verdict::kKept) scratch_[i] = materialize(batch[i], scored);
    }
  });

  for (std::size_t i = 0; i < batch.size(); ++i) {
    ++report_.read;
    switch (verdicts_[i]) {
      case Verdict::kKept:
        ++report_.kept;
        sink(scratch_[i]);
        break;
      case Verdict::kBelowThreshold:
        ++report_.dropped_below_threshold;
        break;
      case Verdict::kUnscoreable:
        ++report_.dropped_unscoreable;
        break;
    }
  }
}

SelectorReport build_pseudo_corpus(PairReader& reader, const SelectorConfig& config,
                                   const OrientedSink& sink, unsigned threads,
                                   std::size_t batch_size) {
  PseudoCorpusBuilder builder(config, threads);
  std::vector<SentencePair> batch;
  batch.reserve(batch_size);
  while (reader.next_batch(batch, batch_size)) builder.process(batch, sink);
  return builder.report();
}

std::pair<std::vector<OrientedPair>, SelectorReport> build_pseudo_corpus(
    std::span<const SentencePair> pairs, const SelectorConfig& config, unsigned threads) {
  PseudoCorpusBuilder builder(config, threads);
  std::vector<OrientedPair> kept;
  builder.process(pairs, [&](const OrientedPair& p) { kept.push_back(p); });
  return {std::move(kept), builder.report()};
}

CorpusStats compute_stats(std::span<const OrientedPair> pairs) {
  StatsAccumulator acc;
  for (const auto& pair : pairs) acc.add(pair.complex, pair.simple);
  return acc.result();
}

}  // namespace simplicorpus
