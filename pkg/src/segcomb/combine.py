"""Build combined training sets from one source and several target variants.

Combination is plain block concatenation: the source sentences repeat
once per target variant, in variant order, so a k-variant combination
holds k instances of every source sentence. Nothing is shuffled or
deduplicated here; that belongs to the trainer.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

from .corpus import ParallelCorpus, SchemeId, SegmentedLine, detokenize
from .errors import DataError, UsageError


@dataclass(frozen=True)
class CombinedCorpus:
    """A concatenated parallel corpus plus the per-block provenance manifest."""

    pairs: ParallelCorpus
    manifest: tuple[tuple[SchemeId, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "manifest", tuple(tuple(m) for m in self.manifest))
        if sum(count for _, count in self.manifest) != len(self.pairs):
            raise ValueError("manifest pair counts do not add up to the corpus size")

    def sources(self) -> list[SegmentedLine]:
        return self.pairs.sources()

    def targets(self) -> list[SegmentedLine]:
        return self.pairs.targets()

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class CorpusStats:
    sentence_count: int
    token_count: int
    distinct_type_count: int
    mean_tokens_per_sentence: float
    duplication_factor: float


def combine(
    source: Sequence[SegmentedLine],
    target_variants: Sequence[tuple[SchemeId, Sequence[SegmentedLine]]],
) -> CombinedCorpus:
    """Append (source, variant) blocks in variant order.

    The source segmentation is fixed across variants; every variant must
    align with it line for line.
    """
    if not target_variants:
        raise UsageError("combine needs at least one target variant")
    pairs: list[tuple[SegmentedLine, SegmentedLine]] = []
    manifest: list[tuple[SchemeId, int]] = []
    for scheme, targets in target_variants:
        if len(targets) != len(source):
            raise DataError(
                f"variant {scheme.label!r} has {len(targets)} lines, source has {len(source)}"
            )
        pairs.extend(zip(source, targets))
        manifest.append((scheme, len(targets)))
    return CombinedCorpus(ParallelCorpus(tuple(pairs)), tuple(manifest))


def corpus_stats(lines: Sequence[SegmentedLine]) -> CorpusStats:
    """Token/type/duplication statistics for one side of a corpus.

    The duplication factor counts instances per unique underlying
    sentence (comparison is on detokenized text, so the same sentence
    under two segmentations still counts once).
    """
    sentence_count = len(lines)
    token_count = sum(len(seg) for seg in lines)
    types = set()
    texts = set()
    for seg in lines:
        types.update(seg.tokens)
        texts.add(detokenize(seg))
    mean = token_count / sentence_count if sentence_count else 0.0
    duplication = sentence_count / len(texts) if texts else 0.0
    return CorpusStats(
        sentence_count=sentence_count,
        token_count=token_count,
        distinct_type_count=len(types),
        mean_tokens_per_sentence=mean,
        duplication_factor=duplication,
    )


def save_manifest(manifest: Sequence[tuple[SchemeId, int]], path: str | Path) -> None:
    """Sidecar TSV attributing each appended block: scheme label, pair count."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for scheme, count in manifest:
            fh.write(f"{scheme.label}\t{count}\n")
