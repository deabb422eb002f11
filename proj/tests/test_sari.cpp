#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "sari_oracle.hpp"
#include "simplicorpus/error.hpp"
#include "simplicorpus/sari.hpp"

using namespace simplicorpus;

namespace {

Tokens random_tokens(std::mt19937_64& rng, std::size_t max_len) {
  Tokens t(rng() % (max_len + 1));
  for (auto& tok : t) tok = std::string(1, static_cast<char>('a' + rng() % 6));
  return t;
}

SariInstance random_instance(std::mt19937_64& rng, std::size_t refs) {
  SariInstance inst;
  inst.original = random_tokens(rng, 6);
  inst.system = random_tokens(rng, 6);
  for (std::size_t r = 0; r < refs; ++r) inst.references.push_back(random_tokens(rng, 6));
  return inst;
}

void check_against_oracle(const SariInstance& inst, bool del_f1 = false) {
  SariOptions opts;
  opts.del = del_f1 ? DeleteMode::kF1 : DeleteMode::kPrecision;
  const auto got = sari_sentence(inst, opts);
  const auto want = oracle::sari(inst.original, inst.system, inst.references, del_f1);
  CHECK(std::abs(got.overall - want.overall) <= 1e-9);
  CHECK(std::abs(got.keep_f1 - want.keep) <= 1e-9);
  CHECK(std::abs(got.add_f1 - want.add) <= 1e-9);
  CHECK(std::abs(got.del_score - want.del) <= 1e-9);
  for (std::size_t n = 0; n < 4; ++n) {
    CHECK(std::abs(got.per_n[n].keep - want.keep_n[n]) <= 1e-9);
    CHECK(std::abs(got.per_n[n].add - want.add_n[n]) <= 1e-9);
    CHECK(std::abs(got.per_n[n].del - want.del_n[n]) <= 1e-9);
  }
}

}  // namespace

TEST_SUITE("sari") {

TEST_CASE("ngram_counts") {
  const Tokens aba{"a", "b", "a"};
  CHECK(ngram_counts(aba, 1) == NgramCounts{{{"a"}, 2}, {{"b"}, 1}});
  CHECK(ngram_counts(aba, 2) == NgramCounts{{{"a", "b"}, 1}, {{"b", "a"}, 1}});
  CHECK(ngram_counts(Tokens{"a"}, 2).empty());
  CHECK(ngram_counts(Tokens{}, 1).empty());
}

TEST_CASE("sari_tokens splits on whitespace and lowercases") {
  CHECK(sari_tokens("  The CAT\tsat . ") == Tokens{"the", "cat", "sat", "."});
  CHECK(sari_tokens("Éclair") == Tokens{"éclair"});
  CHECK(sari_tokens("").empty());
}

TEST_CASE("identity scores 100") {
  SariInstance inst{{"a", "b", "c"}, {"a", "b", "c"}, {{"a", "b", "c"}}};
  const auto s = sari_sentence(inst);
  CHECK(s.keep_f1 == 100.0);
  CHECK(s.add_f1 == 100.0);
  CHECK(s.del_score == 100.0);
  CHECK(s.overall == 100.0);
}

TEST_CASE("ignoring a required deletion zeroes the delete component") {
  SariInstance inst{{"a", "b", "c", "d"}, {"a", "b", "c", "d"}, {{"a", "b", "c"}}};
  const auto s = sari_sentence(inst);
  CHECK(s.del_score == 0.0);
  for (const auto& o : s.per_n) CHECK(o.del == 0.0);
  CHECK(s.add_f1 == 100.0);
  // unigram keep: P = 3/4, R = 1
  CHECK(s.per_n[0].keep == doctest::Approx(100.0 * 6.0 / 7.0));
  CHECK(s.overall < 100.0);
  check_against_oracle(inst);
}

TEST_CASE("hand-evaluated multi-reference instance") {
  // orig "a b", sys "a c", refs "a c" and "b".
  // unigrams: rbar a=.5 b=.5 c=.5
  //   keep: ks a=1 ; kr a=.5 b=.5 -> overlap .5, P=.5, R=.5, F1=.5
  //   add:  as c=1 ; ar c=.5 -> P=.5 R=1 F1=2/3
  //   del:  ds b=1 ; dr a=.5 b=.5 -> overlap .5, P=.5
  SariInstance inst{{"a", "b"}, {"a", "c"}, {{"a", "c"}, {"b"}}};
  const auto s = sari_sentence(inst);
  CHECK(s.per_n[0].keep == doctest::Approx(50.0));
  CHECK(s.per_n[0].add == doctest::Approx(200.0 / 3.0));
  CHECK(s.per_n[0].del == doctest::Approx(50.0));
  check_against_oracle(inst);
}

TEST_CASE("component and overall identities") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const auto s = sari_sentence(random_instance(rng, 1 + rng() % 3));
    double k = 0, a = 0, d = 0;
    for (const auto& o : s.per_n) {
      k += o.keep;
      a += o.add;
      d += o.del;
    }
    CHECK(s.keep_f1 == k / 4.0);
    CHECK(s.add_f1 == a / 4.0);
    CHECK(s.del_score == d / 4.0);
    CHECK(s.overall == (s.keep_f1 + s.add_f1 + s.del_score) / 3.0);
    for (double v : {s.overall, s.keep_f1, s.add_f1, s.del_score}) {
      CHECK(v >= 0.0);
      CHECK(v <= 100.0);
    }
  }
}

TEST_CASE("matches the brute-force oracle on random small instances") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) check_against_oracle(random_instance(rng, 1 + rng() % 3));
  for (int i = 0; i < 300; ++i) check_against_oracle(random_instance(rng, 1 + rng() % 3), true);
}

TEST_CASE("reference order does not matter") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    auto inst = random_instance(rng, 3);
    const auto before = sari_sentence(inst);
    std::shuffle(inst.references.begin(), inst.references.end(), rng);
    CHECK(std::abs(sari_sentence(inst).overall - before.overall) <= 1e-12);
  }
}

TEST_CASE("system equal to the only reference maximizes keep and add") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 200; ++i) {
    auto inst = random_instance(rng, 1);
    inst.system = inst.references[0];
    const auto s = sari_sentence(inst);
    CHECK(s.keep_f1 == doctest::Approx(100.0));
    CHECK(s.add_f1 == doctest::Approx(100.0));
  }
}

TEST_CASE("delete F1 mode") {
  // orig "a b c", sys "a", ref "a b": deletion candidates b,c; reference wants c.
  SariInstance inst{{"a", "b", "c"}, {"a"}, {{"a", "b"}}};
  SariOptions f1;
  f1.del = DeleteMode::kF1;
  CHECK(sari_sentence(inst).per_n[0].del == doctest::Approx(50.0));
  CHECK(sari_sentence(inst, f1).per_n[0].del == doctest::Approx(100.0 * 2.0 / 3.0));
  check_against_oracle(inst, true);
}

TEST_CASE("empty references") {
  SariInstance inst{{"a"}, {"a"}, {}};
  CHECK_THROWS_AS(sari_sentence(inst), EmptyReferences);
}

TEST_CASE("corpus averaging") {
  std::mt19937_64 rng(53);
  std::vector<SariInstance> one{random_instance(rng, 2)};
  const auto single = sari_corpus(one);
  CHECK(single.overall == sari_sentence(one[0]).overall);

  std::vector<SariInstance> two{random_instance(rng, 2), random_instance(rng, 2)};
  const double x = sari_sentence(two[0]).overall;
  const double y = sari_sentence(two[1]).overall;
  CHECK(sari_corpus(two).overall == doctest::Approx((x + y) / 2.0).epsilon(1e-14));

  std::vector<SariInstance> many;
  for (int i = 0; i < 50; ++i) many.push_back(random_instance(rng, 3));
  const auto base = sari_corpus(many);
  auto doubled = many;
  doubled.insert(doubled.end(), many.begin(), many.end());
  CHECK(std::abs(sari_corpus(doubled).overall - base.overall) <= 1e-12);
  auto shuffled = many;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  CHECK(std::abs(sari_corpus(shuffled).overall - base.overall) <= 1e-12);
  CHECK(sari_corpus(many, {}, 4).overall == base.overall);
}

TEST_CASE("corpus errors") {
  CHECK_THROWS_AS(sari_corpus(std::vector<SariInstance>{}), EmptyCorpus);
  std::vector<SariInstance> ragged{{{"a"}, {"a"}, {{"a"}}}, {{"a"}, {"a"}, {{"a"}, {"b"}}}};
  CHECK_THROWS_AS(sari_corpus(ragged), RaggedReferences);
}

}  // TEST_SUITE
