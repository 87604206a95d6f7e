"""Core corpus types and the space-sentinel convention.

A corpus is a list of sentences (plain ``str``, one per line, no line
terminators). Literal spaces are replaced by the sentinel U+2581 before
segmentation so that token boundaries can be space-delimited in files and
every segmentation stays reversible: detokenization is concatenation
followed by mapping the sentinel back to a space.

U+2581 is reserved: raw input containing it is rejected rather than
escaped, which keeps decoding unambiguous.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from pathlib import Path

from .errors import DataError

SENTINEL = "▁"  # LOWER ONE EIGHTH BLOCK

_SCHEME_KINDS = ("character", "bpe", "longest_match", "maximal_match", "external", "word")


def sentinel_encode(text: str) -> str:
    """Replace every U+0020 with the sentinel; reject reserved input."""
    if SENTINEL in text:
        raise DataError(f"input contains the reserved sentinel character U+2581: {text!r}")
    return text.replace(" ", SENTINEL)


def sentinel_decode(text: str) -> str:
    """Map sentinels back to spaces (inverse of :func:`sentinel_encode`)."""
    return text.replace(SENTINEL, " ")


@dataclass(frozen=True)
class SchemeId:
    """Names the strategy that produced a token sequence.

    ``kind`` is one of character, bpe, longest_match, maximal_match,
    external, word. BPE schemes carry the merge-operation count, external
    schemes the tool name. ``label`` is free-form and defaults to a stable
    rendering of the other fields.
    """

    kind: str
    n_merges: int | None = None
    name: str | None = None
    label: str = ""

    def __post_init__(self):
        if self.kind not in _SCHEME_KINDS:
            raise ValueError(f"unknown scheme kind: {self.kind!r}")
        if self.kind == "bpe":
            if self.n_merges is None or self.n_merges < 1:
                raise ValueError("bpe scheme requires a positive merge count")
        if self.kind == "external" and not self.name:
            raise ValueError("external scheme requires a tool name")
        if not self.label:
            object.__setattr__(self, "label", self._default_label())

    def _default_label(self) -> str:
        if self.kind == "bpe":
            return f"bpe{self.n_merges}"
        if self.kind == "external":
            return f"external:{self.name}"
        return self.kind

    def __str__(self) -> str:
        return self.label

    @classmethod
    def character(cls, label: str = "") -> "SchemeId":
        return cls("character", label=label)

    @classmethod
    def bpe(cls, n_merges: int, label: str = "") -> "SchemeId":
        return cls("bpe", n_merges=n_merges, label=label)

    @classmethod
    def longest_match(cls, label: str = "") -> "SchemeId":
        return cls("longest_match", label=label)

    @classmethod
    def maximal_match(cls, label: str = "") -> "SchemeId":
        return cls("maximal_match", label=label)

    @classmethod
    def external(cls, name: str, label: str = "") -> "SchemeId":
        return cls("external", name=name, label=label)

    @classmethod
    def word(cls, label: str = "") -> "SchemeId":
        return cls("word", label=label)


@dataclass(frozen=True)
class SegmentedLine:
    """One sentence as an ordered token sequence plus its scheme.

    Tokens are non-empty and never contain U+0020; spaces in the original
    text are carried by the sentinel, so joining tokens with single spaces
    round-trips through a file.
    """

    tokens: tuple[str, ...]
    scheme: SchemeId

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        for tok in self.tokens:
            if not tok:
                raise ValueError("empty token in segmented line")
            if " " in tok:
                raise ValueError(f"token contains U+0020: {tok!r}")

    def __len__(self) -> int:
        return len(self.tokens)

    def text(self) -> str:
        """The original sentence this segmentation came from."""
        return detokenize(self)


def detokenize(seg: SegmentedLine | Iterable[str]) -> str:
    """Concatenate tokens and decode sentinels back to spaces."""
    tokens = seg.tokens if isinstance(seg, SegmentedLine) else seg
    return sentinel_decode("".join(tokens))


@dataclass(frozen=True)
class ParallelCorpus:
    """Aligned (source, target) segmented sentence pairs, order-preserving."""

    pairs: tuple[tuple[SegmentedLine, SegmentedLine], ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(tuple(p) for p in self.pairs))
        for p in self.pairs:
            if len(p) != 2:
                raise ValueError("parallel corpus pairs must be (source, target)")

    @classmethod
    def from_sides(
        cls, sources: Sequence[SegmentedLine], targets: Sequence[SegmentedLine]
    ) -> "ParallelCorpus":
        if len(sources) != len(targets):
            raise DataError(
                f"source/target length mismatch: {len(sources)} vs {len(targets)}"
            )
        return cls(tuple(zip(sources, targets)))

    def sources(self) -> list[SegmentedLine]:
        return [s for s, _ in self.pairs]

    def targets(self) -> list[SegmentedLine]:
        return [t for _, t in self.pairs]

    def __len__(self) -> int:
        return len(self.pairs)


def _read_lines(path: str | Path) -> list[str]:
    """Decode a file line by line so errors can name the offending line."""
    if str(path) == "-":
        import sys

        raw = sys.stdin.buffer.read()
        path = "<stdin>"
    else:
        raw = Path(path).read_bytes()
    # Trailing newline terminates the last line; it does not open an empty one.
    chunks = raw.split(b"\n")
    if chunks and chunks[-1] == b"":
        chunks.pop()
    lines = []
    for i, chunk in enumerate(chunks, start=1):
        try:
            text = chunk.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DataError(f"invalid UTF-8 ({exc.reason})", path=str(path), line=i) from exc
        if "\r" in text:
            raise DataError("carriage return in line (CRLF input not accepted)",
                            path=str(path), line=i)
        lines.append(text)
    return lines


def load_corpus(path: str | Path, *, allow_sentinel: bool = False) -> list[str]:
    """Load a raw one-sentence-per-line UTF-8 corpus.

    Raw text may not contain the reserved sentinel; pass
    ``allow_sentinel=True`` only for files known to be sentinel-encoded
    already (e.g. text reconstructed from segmented output).
    """
    lines = _read_lines(path)
    if not allow_sentinel:
        for i, line in enumerate(lines, start=1):
            if SENTINEL in line:
                raise DataError("reserved sentinel character U+2581 in raw input",
                                path=str(path), line=i)
    return lines


def load_segmented(path: str | Path, scheme: SchemeId) -> list[SegmentedLine]:
    """Load a segmented corpus: tokens joined by exactly one U+0020 per line."""
    out = []
    for i, line in enumerate(_read_lines(path), start=1):
        if line == "":
            out.append(SegmentedLine((), scheme))
            continue
        tokens = line.split(" ")
        if any(tok == "" for tok in tokens):
            raise DataError("empty token (doubled or dangling separator)",
                            path=str(path), line=i)
        out.append(SegmentedLine(tuple(tokens), scheme))
    return out


def save_lines(lines: Iterable[str], path: str | Path) -> None:
    """Write one sentence per line; the file always ends with a newline."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for line in lines:
            fh.write(line)
            fh.write("\n")


def save_segmented(corpus: Iterable[SegmentedLine | Sequence[str]], path: str | Path) -> None:
    """Write a segmented corpus, tokens joined by single spaces."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for seg in corpus:
            tokens = seg.tokens if isinstance(seg, SegmentedLine) else tuple(seg)
            for tok in tokens:
                if not tok or " " in tok:
                    raise DataError(f"token not writable to segmented file: {tok!r}")
            fh.write(" ".join(tokens))
            fh.write("\n")


def ensure_encoded(line: str) -> str:
    """Check a line is sentinel-encoded (no U+0020); used as a precondition."""
    if " " in line:
        raise DataError(
            "line contains U+0020; sentinel-encode raw text before segmentation"
        )
    return line
