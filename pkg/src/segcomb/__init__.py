"""segcomb: multi-segmentation corpora for translation into unsegmented scripts.

Learn and apply byte pair encoding at several merge counts, segment text
by character or dictionary matching, combine the resulting parallel
corpora target-side, and evaluate with the character n-gram F-score.
"""

from .bpe import MergePair, MergeTable, apply_bpe, learn_bpe, load_merge_table, save_merge_table
from .chrf import ChrfReport, NgramProfile, chrf_score, corpus_chrf, ngram_profile
from .combine import CombinedCorpus, CorpusStats, combine, corpus_stats, save_manifest
from .corpus import (
    SENTINEL,
    ParallelCorpus,
    SchemeId,
    SegmentedLine,
    detokenize,
    load_corpus,
    load_segmented,
    save_lines,
    save_segmented,
    sentinel_decode,
    sentinel_encode,
)
from .errors import DataError, ExternalToolError, SegcombError, UsageError
from .estimators import (
    BpeTokenizer,
    CharacterSegmenter,
    DictionarySegmenter,
    ExternalSegmenter,
    WhitespaceTokenizer,
)
from .segmenters import (
    SegmentToken,
    TrieDictionary,
    char_segment,
    external_segment,
    longest_match_segment,
    longest_match_tokens,
    maximal_match_segment,
    maximal_match_tokens,
    word_segment,
)

__version__ = "0.1.0"

__all__ = [
    "SENTINEL",
    "BpeTokenizer",
    "CharacterSegmenter",
    "ChrfReport",
    "CombinedCorpus",
    "CorpusStats",
    "DataError",
    "DictionarySegmenter",
    "ExternalSegmenter",
    "ExternalToolError",
    "MergePair",
    "MergeTable",
    "NgramProfile",
    "ParallelCorpus",
    "SchemeId",
    "SegcombError",
    "SegmentToken",
    "SegmentedLine",
    "TrieDictionary",
    "UsageError",
    "WhitespaceTokenizer",
    "apply_bpe",
    "char_segment",
    "chrf_score",
    "combine",
    "corpus_chrf",
    "corpus_stats",
    "detokenize",
    "external_segment",
    "learn_bpe",
    "load_corpus",
    "load_merge_table",
    "load_segmented",
    "longest_match_segment",
    "longest_match_tokens",
    "maximal_match_segment",
    "maximal_match_tokens",
    "ngram_profile",
    "save_lines",
    "save_manifest",
    "save_merge_table",
    "save_segmented",
    "sentinel_decode",
    "sentinel_encode",
    "word_segment",
]
