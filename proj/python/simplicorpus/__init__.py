"""Pseudo sentence-simplification corpus construction and SARI scoring."""

from ._core import (
    EmptyCorpus,
    EmptyReferences,
    EmptySentence,
    Error,
    RaggedReferences,
    Unscoreable,
    Comparison,
    CorpusStats,
    OrientedPair,
    Orientation,
    SariScore,
    SelectorConfig,
    SelectorReport,
    SentencePair,
    TokenizedSentence,
    build_pseudo_corpus,
    compute_stats,
    count_syllables,
    fres,
    fres_delta,
    ngram_counts,
    orient,
    sample,
    sari_corpus,
    sari_sentence,
    select,
    tokenize,
)

__all__ = [name for name in dir() if not name.startswith("_")]
