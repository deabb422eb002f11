#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "simplicorpus/parallel.hpp"

namespace cli = simplicorpus::cli;

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"Pseudo simplification corpus construction and SARI scoring"};
  app.set_version_flag("--version", cli::build_identifier());
  app.require_subcommand(1);
  app.fallthrough();

  cli::CommonOptions common;
  common.threads = simplicorpus::default_thread_count();
  app.add_option("--threads", common.threads, "Worker threads")
      ->envname("SIMPLICORPUS_THREADS")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--report", common.report_path, "Write the run manifest here instead of stderr");

  cli::FresOptions fres_opts;
  auto* fres = app.add_subcommand("fres", "Score each input line: <score>\\t<line>, NA if no words");
  fres->add_option("input", fres_opts.input, "Text file, - for stdin");

  cli::SampleOptions sample_opts;
  auto* sample = app.add_subcommand("sample", "Uniform seeded reservoir sample of TSV pairs");
  sample->add_option("--n", sample_opts.n, "Pairs to keep")->capture_default_str();
  sample->add_option("--seed", sample_opts.seed, "RNG seed")->capture_default_str();
  sample->add_option("input", sample_opts.input, "TSV input, - for stdin");
  sample->add_option("output", sample_opts.output, "TSV output, - for stdout");

  cli::FilterOptions filter_opts;
  auto* filter = app.add_subcommand("filter", "Orient pairs by FRES and keep those above the threshold");
  filter->add_option("--threshold", filter_opts.threshold, "Minimum FRES difference")->capture_default_str();
  filter->add_option("--orient", filter_opts.orient, "auto | keep_order")
      ->check(CLI::IsMember({"auto", "keep_order"}))
      ->capture_default_str();
  filter->add_option("--cmp", filter_opts.cmp, "gt (delta > threshold) | ge (delta >= threshold)")
      ->check(CLI::IsMember({"gt", "ge"}))
      ->capture_default_str();
  filter->add_flag("--tsv", filter_opts.tsv, "Write one TSV instead of complex.txt/simple.txt");
  filter->add_option("--out-dir", filter_opts.out_dir, "Directory for complex.txt and simple.txt")
      ->capture_default_str();
  filter->add_option("--complex", filter_opts.complex_path, "Explicit complex-side output path");
  filter->add_option("--simple", filter_opts.simple_path, "Explicit simple-side output path");
  filter->add_option("-o,--output", filter_opts.output, "TSV output with --tsv, - for stdout");
  filter->add_option("input", filter_opts.input, "TSV input, - for stdin");

  cli::StatsOptions stats_opts;
  auto* stats = app.add_subcommand("stats", "Vocabulary sizes and average word counts of a TSV corpus");
  stats->add_option("input", stats_opts.input, "TSV input, - for stdin");

  cli::SariOptions sari_opts;
  auto* sari = app.add_subcommand("sari", "Corpus SARI of a system output");
  sari->add_option("--orig", sari_opts.orig, "Original sentences")->required();
  sari->add_option("--sys", sari_opts.sys, "System outputs")->required();
  sari->add_option("--refs", sari_opts.refs, "Reference files, comma separated")
      ->required()
      ->delimiter(',');
  sari->add_flag("--del-f1", sari_opts.del_f1, "Score deletion with F1 instead of precision");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kBadFlags;
  }

  if (*fres) return cli::run_fres(fres_opts, common);
  if (*sample) return cli::run_sample(sample_opts, common);
  if (*filter) return cli::run_filter(filter_opts, common);
  if (*stats) return cli::run_stats(stats_opts, common);
  if (*sari) return cli::run_sari(sari_opts, common);
  return cli::kBadFlags;
}
