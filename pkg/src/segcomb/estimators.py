"""scikit-learn compatible wrappers around the segmenters.

Each transformer takes an iterable of sentence strings and returns a list
of token lists, so segmentation composes with sklearn pipelines and
anything else following the fit/transform protocol. The functional API in
the sibling modules remains the primary surface; these are thin stateful
shells over it.
"""

from __future__ import annotations

from collections.abc import Iterable

from sklearn.base import BaseEstimator, TransformerMixin

from .bpe import MergeTable, apply_bpe, learn_bpe
from .errors import UsageError
from .segmenters import (
    TrieDictionary,
    char_segment,
    external_segment,
    longest_match_segment,
    maximal_match_segment,
    word_segment,
)


def _check_lines(X) -> list[str]:
    lines = list(X)
    for i, line in enumerate(lines):
        if not isinstance(line, str):
            raise TypeError(f"expected an iterable of str, item {i} is {type(line).__name__}")
    return lines


class BpeTokenizer(BaseEstimator, TransformerMixin):
    """Learn a BPE merge table with ``fit`` and segment with ``transform``.

    After fitting, ``merge_table_`` holds the learned model and
    ``n_performed_`` the number of merges actually carried out (learning
    stops early once the best pair is rarer than ``min_frequency``).
    """

    def __init__(self, n_merges: int = 10000, mode: str = "line", min_frequency: int = 2):
        self.n_merges = n_merges
        self.mode = mode
        self.min_frequency = min_frequency

    def fit(self, X: Iterable[str], y=None):
        lines = _check_lines(X)
        self.merge_table_ = learn_bpe(
            lines, self.n_merges, mode=self.mode, min_frequency=self.min_frequency
        )
        self.n_performed_ = self.merge_table_.n_performed
        return self

    def transform(self, X: Iterable[str]) -> list[list[str]]:
        if not hasattr(self, "merge_table_"):
            raise UsageError("BpeTokenizer is not fitted yet; call fit first")
        return [list(apply_bpe(line, self.merge_table_).tokens) for line in _check_lines(X)]

    @classmethod
    def from_table(cls, table: MergeTable) -> "BpeTokenizer":
        """Wrap an already-learned table (e.g. loaded from disk)."""
        est = cls(n_merges=table.n_requested, mode=table.mode)
        est.merge_table_ = table
        est.n_performed_ = table.n_performed
        return est


class CharacterSegmenter(BaseEstimator, TransformerMixin):
    def __init__(self, granularity: str = "codepoint"):
        self.granularity = granularity

    def fit(self, X=None, y=None):
        return self

    def transform(self, X: Iterable[str]) -> list[list[str]]:
        return [list(char_segment(line, self.granularity).tokens) for line in _check_lines(X)]


class DictionarySegmenter(BaseEstimator, TransformerMixin):
    """Dictionary matching segmenter, greedy (``longest``) or minimal (``maximal``)."""

    def __init__(self, words: Iterable[str] = (), method: str = "longest"):
        self.words = words
        self.method = method

    def fit(self, X=None, y=None):
        if self.method not in ("longest", "maximal"):
            raise UsageError(f"unknown matching method: {self.method!r}")
        self.dictionary_ = (
            self.words if isinstance(self.words, TrieDictionary) else TrieDictionary(self.words)
        )
        return self

    def transform(self, X: Iterable[str]) -> list[list[str]]:
        if not hasattr(self, "dictionary_"):
            self.fit()
        segment = longest_match_segment if self.method == "longest" else maximal_match_segment
        return [list(segment(line, self.dictionary_).tokens) for line in _check_lines(X)]


class WhitespaceTokenizer(BaseEstimator, TransformerMixin):
    def __init__(self, lowercase: bool = False):
        self.lowercase = lowercase

    def fit(self, X=None, y=None):
        return self

    def transform(self, X: Iterable[str]) -> list[list[str]]:
        return [list(word_segment(line, self.lowercase).tokens) for line in _check_lines(X)]


class ExternalSegmenter(BaseEstimator, TransformerMixin):
    """Adapter estimator around an external segmenter process."""

    def __init__(self, command: str = "", name: str | None = None):
        self.command = command
        self.name = name

    def fit(self, X=None, y=None):
        if not self.command:
            raise UsageError("ExternalSegmenter requires a command")
        return self

    def transform(self, X: Iterable[str]) -> list[list[str]]:
        if not self.command:
            raise UsageError("ExternalSegmenter requires a command")
        segs = external_segment(_check_lines(X), self.command, name=self.name)
        return [list(seg.tokens) for seg in segs]
