#include "commands.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string_view>

#include "json.hpp"
#include "simplicorpus/corpus.hpp"
#include "simplicorpus/error.hpp"
#include "simplicorpus/sari.hpp"
#include "simplicorpus/selector.hpp"
#include "simplicorpus/textmetrics.hpp"

#ifndef SIMPLICORPUS_VERSION
#define SIMPLICORPUS_VERSION "0.0.0"
#endif
#ifndef SIMPLICORPUS_GIT_REVISION
#define SIMPLICORPUS_GIT_REVISION "unknown"
#endif

namespace simplicorpus::cli {
namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

class InputFile {
 public:
  explicit InputFile(const std::string& path) : path_(path) {
    if (path == "-") return;
    file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*file_) throw IoError("cannot open input '" + path + "'");
  }
  std::istream& stream() { return file_ ? *file_ : std::cin; }
  [[nodiscard]] bool bad() { return stream().bad(); }
  [[nodiscard]] const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::unique_ptr<std::ifstream> file_;
};

class OutputFile {
 public:
  explicit OutputFile(const std::string& path) : path_(path) {
    if (path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw IoError("cannot open output '" + path + "'");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void close() {
    stream().flush();
    if (!stream()) throw IoError("write failed on '" + path_ + "'");
    if (file_) file_->close();
  }

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
};

// Provenance record for one run, written to stderr or --report.
class Manifest {
 public:
  explicit Manifest(std::string_view subcommand) : start_(Clock::now()) {
    doc_["subcommand"] = subcommand;
    doc_["version"] = build_identifier();
  }
  json& config() { return doc_["config"]; }
  json& counts() { return doc_["counts"]; }

  void emit(const CommonOptions& common) {
    doc_["duration_seconds"] = std::chrono::duration<double>(Clock::now() - start_).count();
    if (common.report_path.empty()) {
      std::cerr << doc_.dump() << '\n';
      return;
    }
    std::ofstream out(common.report_path, std::ios::trunc);
    out << doc_.dump(2) << '\n';
    if (!out) throw IoError("cannot write report '" + common.report_path + "'");
  }

 private:
  json doc_;
  Clock::time_point start_;
};

std::string format_score(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 10);
  return {buf, res.ptr};
}

std::string join_path(const std::string& dir, const std::string& name) {
  if (dir.empty()) return name;
  return dir.back() == '/' ? dir + name : dir + "/" + name;
}

json to_json(const SelectorReport& r) {
  return {{"read", r.read},
          {"kept", r.kept},
          {"dropped_below_threshold", r.dropped_below_threshold},
          {"dropped_unscoreable", r.dropped_unscoreable}};
}

void warn_skipped(const ReadReport& r) {
  if (r.skipped() == 0) return;
  std::cerr << "warning: skipped " << r.malformed << " malformed and " << r.invalid_utf8
            << " non-UTF-8 line(s) of " << r.read << '\n';
}

template <typename Body>
int guarded(Body&& body) {
  try {
    return body();
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const EmptyCorpus& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kEmptyCorpus;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadFlags;
  }
}

}  // namespace

std::string build_identifier() {
  return std::string("simplicorpus ") + SIMPLICORPUS_VERSION + " (" + SIMPLICORPUS_GIT_REVISION + ")";
}

int run_fres(const FresOptions& opts, const CommonOptions& common) {
  return guarded([&] {
    Manifest manifest("fres");
    manifest.config() = {{"input", opts.input}};
    InputFile in(opts.input);
    std::uint64_t lines = 0;
    std::uint64_t unscoreable = 0;
    std::string line;
    std::ostream& out = std::cout;
    while (std::getline(in.stream(), line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      ++lines;
      const auto sentence = tokenize(line);
      if (sentence.word_count == 0) {
        ++unscoreable;
        out << "NA";
      } else {
        out << format_score(fres(sentence).value);
      }
      out << '\t' << line << '\n';
    }
    if (in.bad()) throw IoError("read failed on '" + opts.input + "'");
    out.flush();
    manifest.counts() = {{"lines", lines}, {"unscoreable", unscoreable}};
    manifest.emit(common);
    return kOk;
  });
}

int run_sample(const SampleOptions& opts, const CommonOptions& common) {
  if (opts.n == 0) {
    std::cerr << "error: --n must be >= 1\n";
    return kBadFlags;
  }
  return guarded([&] {
    Manifest manifest("sample");
    manifest.config() = {{"n", opts.n}, {"seed", opts.seed}, {"input", opts.input}, {"output", opts.output}};
    InputFile in(opts.input);
    PairReader reader(in.stream());
    ReservoirSampler sampler(static_cast<std::size_t>(opts.n), opts.seed);
    while (auto pair = reader.next()) sampler.offer(std::move(*pair));
    if (in.bad()) throw IoError("read failed on '" + opts.input + "'");
    const auto seen = sampler.seen();
    const auto picked = std::move(sampler).finish();

    OutputFile out(opts.output);
    for (const auto& pair : picked) write_pair(out.stream(), pair.source, pair.target);
    out.close();

    warn_skipped(reader.report());
    manifest.counts() = {{"lines_read", reader.report().read},
                         {"pairs", seen},
                         {"malformed_lines", reader.report().skipped()},
                         {"sampled", picked.size()}};
    manifest.emit(common);
    return kOk;
  });
}

int run_filter(const FilterOptions& opts, const CommonOptions& common) {
  SelectorConfig config;
  config.threshold = opts.threshold;
  if (opts.orient == "auto") {
    config.orientation = Orientation::kAuto;
  } else if (opts.orient == "keep_order") {
    config.orientation = Orientation::kKeepOrder;
  } else {
    std::cerr << "error: --orient must be auto or keep_order\n";
    return kBadFlags;
  }
  if (opts.cmp == "gt") {
    config.comparison = Comparison::kStrictGreater;
  } else if (opts.cmp == "ge") {
    config.comparison = Comparison::kGreaterEqual;
  } else {
    std::cerr << "error: --cmp must be gt or ge\n";
    return kBadFlags;
  }

  return guarded([&] {
    config.validate();
    Manifest manifest("filter");
    const std::string complex_path =
        opts.complex_path.empty() ? join_path(opts.out_dir, "complex.txt") : opts.complex_path;
    const std::string simple_path =
        opts.simple_path.empty() ? join_path(opts.out_dir, "simple.txt") : opts.simple_path;
    json cfg = {{"threshold", config.threshold},
                {"orient", to_string(config.orientation)},
                {"cmp", to_string(config.comparison)},
                {"tsv", opts.tsv},
                {"input", opts.input},
                {"threads", common.threads}};
    if (opts.tsv) {
      cfg["output"] = opts.output;
    } else {
      cfg["complex"] = complex_path;
      cfg["simple"] = simple_path;
    }
    manifest.config() = cfg;

    InputFile in(opts.input);
    PairReader reader(in.stream());
    SelectorReport report;
    if (opts.tsv) {
      OutputFile out(opts.output);
      report = build_pseudo_corpus(
          reader, config, [&](const OrientedPair& p) { write_pair(out.stream(), p.complex, p.simple); },
          common.threads);
      out.close();
    } else {
      OutputFile complex_out(complex_path);
      OutputFile simple_out(simple_path);
      report = build_pseudo_corpus(
          reader, config,
          [&](const OrientedPair& p) {
            complex_out.stream() << p.complex << '\n';
            simple_out.stream() << p.simple << '\n';
          },
          common.threads);
      complex_out.close();
      simple_out.close();
    }
    if (in.bad()) throw IoError("read failed on '" + opts.input + "'");

    warn_skipped(reader.report());
    json counts = to_json(report);
    counts["malformed_lines"] = reader.report().skipped();
    if (!(opts.tsv && opts.output == "-")) std::cout << counts.dump(2) << '\n';
    manifest.counts() = counts;
    manifest.emit(common);
    return kOk;
  });
}

int run_stats(const StatsOptions& opts, const CommonOptions& common) {
  return guarded([&] {
    Manifest manifest("stats");
    manifest.config() = {{"input", opts.input}};
    InputFile in(opts.input);
    PairReader reader(in.stream());
    StatsAccumulator acc;
    while (auto pair = reader.next()) acc.add(pair->source, pair->target);
    if (in.bad()) throw IoError("read failed on '" + opts.input + "'");
    const CorpusStats stats = acc.result();

    const json doc = {{"vocab_complex", stats.vocab_complex},
                      {"vocab_simple", stats.vocab_simple},
                      {"avg_complex", stats.avg_complex},
                      {"avg_simple", stats.avg_simple},
                      {"total_pairs", stats.total_pairs},
                      {"malformed_lines", reader.report().skipped()}};
    std::cout << doc.dump(2) << '\n';
    manifest.counts() = {{"lines_read", reader.report().read}, {"total_pairs", stats.total_pairs}};
    manifest.emit(common);
    return kOk;
  });
}

namespace {

std::vector<std::string> read_lines(const std::string& path) {
  InputFile in(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in.stream(), line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  if (in.bad()) throw IoError("read failed on '" + path + "'");
  return lines;
}

json score_json(const SariScore& s) {
  return {{"overall", s.overall}, {"keep", s.keep_f1}, {"add", s.add_f1}, {"del", s.del_score}};
}

}  // namespace

int run_sari(const SariOptions& opts, const CommonOptions& common) {
  if (opts.refs.empty()) {
    std::cerr << "error: --refs needs at least one file\n";
    return kBadFlags;
  }
  return guarded([&] {
    Manifest manifest("sari");
    manifest.config() = {{"orig", opts.orig}, {"sys", opts.sys}, {"refs", opts.refs}, {"del_f1", opts.del_f1}};

    const auto orig = read_lines(opts.orig);
    const auto sys = read_lines(opts.sys);
    std::vector<std::vector<std::string>> refs;
    for (const auto& path : opts.refs) refs.push_back(read_lines(path));

    bool aligned = sys.size() == orig.size();
    for (const auto& r : refs) aligned = aligned && r.size() == orig.size();
    if (!aligned) {
      std::cerr << "error: line counts differ: orig " << orig.size() << ", sys " << sys.size();
      for (std::size_t i = 0; i < refs.size(); ++i) std::cerr << ", ref" << i + 1 << ' ' << refs[i].size();
      std::cerr << '\n';
      return kAlignmentMismatch;
    }

    std::vector<SariInstance> instances(orig.size());
    for (std::size_t i = 0; i < orig.size(); ++i) {
      instances[i].original = sari_tokens(orig[i]);
      instances[i].system = sari_tokens(sys[i]);
      for (const auto& r : refs) instances[i].references.push_back(sari_tokens(r[i]));
    }

    simplicorpus::SariOptions sari_opts;
    sari_opts.del = opts.del_f1 ? DeleteMode::kF1 : DeleteMode::kPrecision;
    const auto result = sari_corpus_detailed(instances, sari_opts, common.threads);

    json doc = score_json(result.mean);
    json per_n = json::array();
    for (std::size_t n = 0; n < kSariMaxOrder; ++n) {
      const auto& o = result.mean.per_n[n];
      per_n.push_back({{"n", n + 1}, {"keep", o.keep}, {"add", o.add}, {"del", o.del}});
    }
    doc["per_n"] = per_n;
    json sentences = json::array();
    for (const auto& s : result.sentences) sentences.push_back(score_json(s));
    doc["sentences"] = sentences;
    std::cout << doc.dump(2) << '\n';

    std::cerr << "SARI " << format_score(result.mean.overall) << " (keep "
              << format_score(result.mean.keep_f1) << ", add " << format_score(result.mean.add_f1)
              << ", del " << format_score(result.mean.del_score) << ") over " << instances.size()
              << " sentences, " << refs.size() << " reference(s)\n";
    manifest.counts() = {{"sentences", instances.size()}, {"references", refs.size()}};
    manifest.emit(common);
    return kOk;
  });
}

}  // namespace simplicorpus::cli
