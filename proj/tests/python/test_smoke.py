import math
import random

import pytest

import simplicorpus as sc

FIXTURE = [
    ("Beautiful elephants sat.", "The happy family painted a beautiful elephant."),
    ("The happy family painted beautiful elephants and colorful bananas today.",
     "The happy family painted happy elephants beside colorful bananas with paper."),
    ("The happy family painted big elephants with red animals.",
     "The family painted big elephants and red animals at noon."),
    ("Happy family members painted beautiful elephants today.",
     "Beautiful elephants danced slowly."),
]


def test_tokenize_and_fres():
    s = sc.tokenize("The cat sat.")
    assert s.tokens == ["The", "cat", "sat", "."]
    assert s.word_count == 3
    assert math.isclose(sc.fres(s), 119.19, abs_tol=1e-9)
    assert math.isclose(sc.fres("The cat sat."), 119.19, abs_tol=1e-9)
    assert sc.count_syllables("beautiful") == 3
    with pytest.raises(sc.EmptySentence):
        sc.fres("")
    assert sc.fres_delta("a cat", "a cat") == 0.0


def test_selector_fixture():
    kept, report = sc.build_pseudo_corpus(FIXTURE)
    assert [p.ordinal for p in kept] == [0, 2]
    assert (report.read, report.kept, report.dropped_below_threshold, report.dropped_unscoreable) == (4, 2, 2, 0)
    p = sc.orient(*FIXTURE[3])
    assert p.complex == FIXTURE[3][1]
    assert p.delta > 0
    literal = sc.orient(*FIXTURE[3], policy=sc.Orientation.keep_order)
    assert literal.delta < 0
    assert sc.select(kept[0], sc.SelectorConfig())
    with pytest.raises(ValueError):
        sc.SelectorConfig(threshold=-1.0)
    with pytest.raises(sc.Unscoreable):
        sc.orient("...", "a cat")


def test_threads_do_not_change_output():
    rng = random.Random(3)
    words = ["the", "cat", "sat", "beautiful", "international", "a", "responsibility", "dog"]
    pairs = [(" ".join(rng.choices(words, k=rng.randint(1, 12))), " ".join(rng.choices(words, k=rng.randint(1, 12))))
             for _ in range(2000)]
    one, r1 = sc.build_pseudo_corpus(pairs, threads=1)
    four, r4 = sc.build_pseudo_corpus(pairs, threads=4)
    assert [(p.complex, p.simple) for p in one] == [(p.complex, p.simple) for p in four]
    assert r1.kept == r4.kept


def test_sample_and_stats():
    pairs = [sc.SentencePair(f"s {i}", f"t {i}", i) for i in range(100)]
    a = sc.sample(pairs, 10, seed=7)
    assert a == sc.sample(pairs, 10, seed=7)
    assert [p.ordinal for p in a] == sorted(p.ordinal for p in a)
    stats = sc.compute_stats([("a b c", "a b"), ("a d", "a")])
    assert (stats.vocab_complex, stats.vocab_simple, stats.total_pairs) == (4, 2, 2)
    assert stats.avg_complex == 2.5 and stats.avg_simple == 1.5
    kept, report = sc.build_pseudo_corpus(FIXTURE)
    assert sc.compute_stats(kept).total_pairs == report.kept
    with pytest.raises(sc.EmptyCorpus):
        sc.compute_stats([])


def test_sari():
    assert sc.ngram_counts(["a", "b", "a"], 1) == {("a",): 2, ("b",): 1}
    s = sc.sari_sentence("a b c", "a b c", ["a b c"])
    assert s.overall == 100.0
    s = sc.sari_sentence("a b c d", "a b c d", ["a b c"])
    assert s.delete == 0.0 and s.overall < 100.0
    assert len(s.per_n) == 4
    corpus = sc.sari_corpus(["a b c", "a b c d"], ["a b c", "a b c d"], [["a b c"], ["a b c"]])
    assert math.isclose(corpus.overall, (100.0 + s.overall) / 2)
    with pytest.raises(sc.EmptyReferences):
        sc.sari_sentence("a", "a", [])
    with pytest.raises(sc.RaggedReferences):
        sc.sari_corpus(["a", "b"], ["a", "b"], [["a"], ["a", "b"]])
