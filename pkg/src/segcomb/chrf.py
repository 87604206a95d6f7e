"""Character n-gram F-score for evaluating translation into unsegmented text.

Scores compare code-point n-grams of orders 1..N between hypothesis and
reference. Per order, precision is matched n-grams over hypothesis
n-grams and recall is matched over reference n-grams; a count of zero on
one side contributes zero, and orders empty on both sides are skipped.
The score is the beta-weighted harmonic mean, scaled to [0, 100]:

    score = 100 * (1 + beta^2) * P * R / (beta^2 * P + R)

with beta = 3 by default, weighting recall three times as much as
precision. Whitespace is stripped by default so the score does not
depend on how either side was segmented.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import DataError, UsageError

DEFAULT_BETA = 3.0
DEFAULT_MAX_ORDER = 6


@dataclass(frozen=True)
class NgramProfile:
    """Multisets of code-point n-grams for each order 1..max_order."""

    max_order: int
    counters: tuple[Counter, ...]

    def order(self, n: int) -> Counter:
        return self.counters[n - 1]

    def total(self, n: int) -> int:
        return sum(self.counters[n - 1].values())


@dataclass(frozen=True)
class OrderStats:
    """Sufficient statistics for one n-gram order."""

    matched: int
    hyp_total: int
    ref_total: int


@dataclass(frozen=True)
class ChrfReport:
    beta: float
    max_order: int
    segment_scores: tuple[float, ...]
    corpus_score: float
    order_stats: tuple[OrderStats, ...]


def ngram_profile(text: str, max_order: int) -> NgramProfile:
    """Count all code-point n-grams of orders 1..max_order with multiplicity."""
    if max_order < 1:
        raise UsageError("max_order must be at least 1")
    counters = tuple(
        Counter(text[i : i + n] for i in range(len(text) - n + 1))
        for n in range(1, max_order + 1)
    )
    return NgramProfile(max_order, counters)


def _apply_whitespace(text: str, whitespace: str) -> str:
    if whitespace == "strip":
        return text.replace(" ", "")
    if whitespace == "keep":
        return text
    raise UsageError(f"unknown whitespace policy: {whitespace!r}")


def _pair_stats(hypothesis: str, reference: str, max_order: int) -> list[OrderStats]:
    hyp = ngram_profile(hypothesis, max_order)
    ref = ngram_profile(reference, max_order)
    stats = []
    for n in range(1, max_order + 1):
        matched = sum((hyp.order(n) & ref.order(n)).values())
        stats.append(OrderStats(matched, hyp.total(n), ref.total(n)))
    return stats


def _score_from_stats(stats: Sequence[OrderStats], beta: float) -> float:
    precisions = []
    recalls = []
    for s in stats:
        if s.hyp_total == 0 and s.ref_total == 0:
            continue
        precisions.append(s.matched / s.hyp_total if s.hyp_total else 0.0)
        recalls.append(s.matched / s.ref_total if s.ref_total else 0.0)
    if not precisions:
        return 100.0  # nothing on either side at any order: perfect agreement
    chrp = sum(precisions) / len(precisions)
    chrr = sum(recalls) / len(recalls)
    denom = beta * beta * chrp + chrr
    if denom == 0.0:
        return 0.0
    return 100.0 * (1.0 + beta * beta) * chrp * chrr / denom


def chrf_score(
    hypothesis: str,
    reference: str,
    *,
    beta: float = DEFAULT_BETA,
    max_order: int = DEFAULT_MAX_ORDER,
    whitespace: str = "strip",
) -> float:
    """Score one hypothesis against one reference, in [0, 100]."""
    if beta <= 0:
        raise UsageError("beta must be positive")
    hyp = _apply_whitespace(hypothesis, whitespace)
    ref = _apply_whitespace(reference, whitespace)
    return _score_from_stats(_pair_stats(hyp, ref, max_order), beta)


def corpus_chrf(
    hyp_lines: Sequence[str],
    ref_lines: Sequence[str],
    *,
    beta: float = DEFAULT_BETA,
    max_order: int = DEFAULT_MAX_ORDER,
    whitespace: str = "strip",
) -> ChrfReport:
    """Score a whole test set.

    The corpus score micro-aggregates: per-order matched/hypothesis/
    reference counts are summed over all segments before any precision or
    recall is computed, so it is not an average of segment scores.
    """
    if beta <= 0:
        raise UsageError("beta must be positive")
    if len(hyp_lines) != len(ref_lines):
        raise DataError(
            f"line count mismatch: {len(hyp_lines)} hypotheses, {len(ref_lines)} references"
        )
    totals = [[0, 0, 0] for _ in range(max_order)]
    segment_scores = []
    for hyp_raw, ref_raw in zip(hyp_lines, ref_lines):
        hyp = _apply_whitespace(hyp_raw, whitespace)
        ref = _apply_whitespace(ref_raw, whitespace)
        stats = _pair_stats(hyp, ref, max_order)
        segment_scores.append(_score_from_stats(stats, beta))
        for n, s in enumerate(stats):
            totals[n][0] += s.matched
            totals[n][1] += s.hyp_total
            totals[n][2] += s.ref_total
    order_stats = tuple(OrderStats(m, h, r) for m, h, r in totals)
    return ChrfReport(
        beta=beta,
        max_order=max_order,
        segment_scores=tuple(segment_scores),
        corpus_score=_score_from_stats(order_stats, beta),
        order_stats=order_stats,
    )


def format_score_line(score: float, beta: float) -> str:
    """The stable one-line CLI output, e.g. ``chrf3 = 47.90``."""
    return f"chrf{beta:g} = {score:.2f}"
