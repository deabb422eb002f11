#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace simplicorpus::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 2,
  kBadFlags = 3,
  kEmptyCorpus = 4,
  kAlignmentMismatch = 5,
};

struct CommonOptions {
  unsigned threads = 1;
  std::string report_path;  // empty: stderr
};

struct FresOptions {
  std::string input = "-";
};

struct SampleOptions {
  std::uint64_t n = 2'000'000;
  std::uint64_t seed = 0;
  std::string input = "-";
  std::string output = "-";
};

struct FilterOptions {
  double threshold = 10.0;
  std::string orient = "auto";
  std::string cmp = "gt";
  bool tsv = false;
  std::string input = "-";
  std::string out_dir = ".";
  std::string complex_path;
  std::string simple_path;
  std::string output = "-";  // only with --tsv
};

struct StatsOptions {
  std::string input = "-";
};

struct SariOptions {
  std::string orig;
  std::string sys;
  std::vector<std::string> refs;
  bool del_f1 = false;
};

int run_fres(const FresOptions& opts, const CommonOptions& common);
int run_sample(const SampleOptions& opts, const CommonOptions& common);
int run_filter(const FilterOptions& opts, const CommonOptions& common);
int run_stats(const StatsOptions& opts, const CommonOptions& common);
int run_sari(const SariOptions& opts, const CommonOptions& common);

std::string build_identifier();

}  // namespace simplicorpus::cli
