#include "simplicorpus/sari.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "simplicorpus/error.hpp"
#include "simplicorpus/parallel.hpp"
#include "unicode.hpp"

namespace simplicorpus {
namespace {

// Candidate-side total, reference-side total and their overlap for one
// operation at one order.
struct OperationTally {
  double overlap = 0.0;
  double candidate = 0.0;
  double reference = 0.0;

  [[nodiscard]] bool vacuous() const { return candidate == 0.0 && reference == 0.0; }

  [[nodiscard]] double precision() const {
    if (vacuous()) return 1.0;
    return candidate > 0.0 ? overlap / candidate : 0.0;
  }

  [[nodiscard]] double f1() const {
    if (vacuous()) return 1.0;
    const double p = candidate > 0.0 ? overlap / candidate : 0.0;
    const double r = reference > 0.0 ? overlap / reference : 0.0;
    return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
  }
};

std::size_t lookup(const NgramCounts& counts, const std::vector<std::string>& key) {
  const auto it = counts.find(key);
  return it == counts.end() ? 0 : it->second;
}

SariOrderScore score_order(const SariInstance& inst, std::size_t n, const SariOptions& options) {
  const NgramCounts orig = ngram_counts(inst.original, n);
  const NgramCounts sys = ngram_counts(inst.system, n);
  NgramCounts ref_sum;
  for (const auto& ref : inst.references) {
    for (const auto& [gram, count] : ngram_counts(ref, n)) ref_sum[gram] += count;
  }
  const auto num_refs = static_cast<double>(inst.references.size());

  std::set<std::vector<std::string>> grams;
  for (const NgramCounts* counts : std::initializer_list<const NgramCounts*>{&orig, &sys, &ref_sum}) {
    for (const auto& entry : *counts) grams.insert(entry.first);
  }

  OperationTally keep;
  OperationTally add;
  OperationTally del;
  for (const auto& gram : grams) {
    const auto o = static_cast<double>(lookup(orig, gram));
    const auto s = static_cast<double>(lookup(sys, gram));
    const double r = static_cast<double>(lookup(ref_sum, gram)) / num_refs;

    const double ks = std::min(o, s);
    const double kr = std::min(o, r);
    keep.candidate += ks;
    keep.reference += kr;
    keep.overlap += std::min(ks, kr);

    const double as = std::max(0.0, s - o);
    const double ar = std::max(0.0, r - o);
    add.candidate += as;
    add.reference += ar;
    add.overlap += std::min(as, ar);

    const double ds = std::max(0.0, o - s);
    const double dr = std::max(0.0, o - r);
    del.candidate += ds;
    del.reference += dr;
    del.overlap += std::min(ds, dr);
  }

  SariOrderScore score;
  score.keep = 100.0 * keep.f1();
  score.add = 100.0 * add.f1();
  score.del = 100.0 * (options.del == DeleteMode::kF1 ? del.f1() : del.precision());
  return score;
}

// Neumaier summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

NgramCounts ngram_counts(std::span<const std::string> tokens, std::size_t n) {
  NgramCounts counts;
  if (n == 0 || tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[std::vector<std::string>(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                      tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return counts;
}

Tokens sari_tokens(std::string_view line) {
  Tokens tokens;
  std::size_t pos = 0;
  std::size_t start = std::string_view::npos;
  while (pos < line.size()) {
    const auto cp = unicode::decode_at(line, pos);
    const bool space = cp.valid && unicode::is_whitespace(cp.value);
    if (space && start != std::string_view::npos) {
      tokens.push_back(unicode::to_lower(line.substr(start, pos - start)));
      start = std::string_view::npos;
    } else if (!space && start == std::string_view::npos) {
      start = pos;
    }
    pos += cp.length;
  }
  if (start != std::string_view::npos) tokens.push_back(unicode::to_lower(line.substr(start)));
  return tokens;
}

SariScore sari_sentence(const SariInstance& inst, const SariOptions& options) {
  if (inst.references.empty()) throw EmptyReferences();
  SariScore score;
  for (std::size_t n = 1; n <= kSariMaxOrder; ++n) score.per_n[n - 1] = score_order(inst, n, options);

  double keep = 0.0;
  double add = 0.0;
  double del = 0.0;
  for (const auto& order : score.per_n) {
    keep += order.keep;
    add += order.add;
    del += order.del;
  }
  constexpr auto orders = static_cast<double>(kSariMaxOrder);
  score.keep_f1 = keep / orders;
  score.add_f1 = add / orders;
  score.del_score = del / orders;
  score.overall = (score.keep_f1 + score.add_f1 + score.del_score) / 3.0;
  return score;
}

SariCorpusScore sari_corpus_detailed(std::span<const SariInstance> instances,
                                     const SariOptions& options, unsigned threads) {
  if (instances.empty()) throw EmptyCorpus("no SARI instances");
  const std::size_t expected_refs = instances.front().references.size();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (instances[i].references.size() != expected_refs) {
      throw RaggedReferences(expected_refs, instances[i].references.size(), i);
    }
  }

  SariCorpusScore result;
  result.sentences.resize(instances.size());
  parallel_for(instances.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) result.sentences[i] = sari_sentence(instances[i], options);
  });

  CompensatedSum overall;
  CompensatedSum keep;
  CompensatedSum add;
  CompensatedSum del;
  std::array<std::array<CompensatedSum, 3>, kSariMaxOrder> per_n{};
  for (const auto& s : result.sentences) {
    overall.add(s.overall);
    keep.add(s.keep_f1);
    add.add(s.add_f1);
    del.add(s.del_score);
    for (std::size_t n = 0; n < kSariMaxOrder; ++n) {
      per_n[n][0].add(s.per_n[n].keep);
      per_n[n][1].add(s.per_n[n].add);
      per_n[n][2].add(s.per_n[n].del);
    }
  }
  const auto count = static_cast<double>(instances.size());
  result.mean.overall = overall.value() / count;
  result.mean.keep_f1 = keep.value() / count;
  result.mean.add_f1 = add.value() / count;
  result.mean.del_score = del.value() / count;
  for (std::size_t n = 0; n < kSariMaxOrder; ++n) {
    result.mean.per_n[n] = {per_n[n][0].value() / count, per_n[n][1].value() / count,
                            per_n[n][2].value() / count};
  }
  return result;
}

SariScore sari_corpus(std::span<const SariInstance> instances, const SariOptions& options,
                      unsigned threads) {
  return sari_corpus_detailed(instances, options, threads).mean;
}

}  // namespace simplicorpus
