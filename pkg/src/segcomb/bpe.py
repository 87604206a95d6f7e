"""Byte pair encoding: learn merge tables, apply them, persist them.

Learning starts from per-code-point symbols and repeatedly merges the
most frequent adjacent pair until the requested number of merge
operations is reached or the best pair drops below ``min_frequency``.
Conventions that the (otherwise underspecified) procedure needs pinned
down:

* counting tallies every adjacent position, so overlapping occurrences
  each count ("aaa" holds two ("a","a") positions);
* replacement scans each sequence left to right and consumes matched
  positions non-overlappingly ("aaa" becomes ["aa","a"]);
* ties between equally frequent pairs go to the lexicographically
  smallest (left, right) under code-point order, which makes learned
  tables reproducible byte for byte.

``line`` mode treats the whole (sentinel-encoded) line as one symbol
sequence; it is the default for scripts without word boundaries. ``word``
mode splits lines on U+0020, appends an end-of-word marker to each word,
and never merges across word boundaries; it serves pre-tokenized text.
"""

from __future__ import annotations

import heapq
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from pathlib import Path

from .corpus import SENTINEL, SchemeId, SegmentedLine, ensure_encoded
from .errors import DataError, UsageError

WORD_END = "</w>"

_HEADER_PREFIX = "#segcomb merges v1"


@dataclass(frozen=True)
class MergePair:
    """One learned merge: adjacent (left, right) becomes left+right."""

    left: str
    right: str
    rank: int

    def __post_init__(self):
        if not self.left or not self.right:
            raise ValueError("merge pair sides must be non-empty")
        if " " in self.left or " " in self.right:
            raise ValueError("merge pair sides may not contain U+0020")
        if self.rank < 0:
            raise ValueError("merge rank must be non-negative")

    @property
    def merged(self) -> str:
        return self.left + self.right


@dataclass(frozen=True)
class MergeTable:
    """An ordered merge list plus the settings it was learned with."""

    merges: tuple[MergePair, ...]
    mode: str
    n_requested: int

    def __post_init__(self):
        object.__setattr__(self, "merges", tuple(self.merges))
        if self.mode not in ("line", "word"):
            raise ValueError(f"unknown BPE mode: {self.mode!r}")
        if self.n_requested < 1:
            raise ValueError("requested merge count must be positive")
        if len(self.merges) > self.n_requested:
            raise ValueError("table holds more merges than were requested")
        seen = set()
        for i, m in enumerate(self.merges):
            if m.rank != i:
                raise ValueError("merge ranks must be contiguous from 0")
            key = (m.left, m.right)
            if key in seen:
                raise ValueError(f"duplicate merge pair: {key!r}")
            seen.add(key)

    @property
    def n_performed(self) -> int:
        return len(self.merges)

    def pairs(self) -> list[tuple[str, str]]:
        return [(m.left, m.right) for m in self.merges]

    def scheme(self, label: str = "") -> SchemeId:
        return SchemeId.bpe(self.n_requested, label=label)


def _merge_once(seq: list[str], left: str, right: str) -> tuple[list[str], int]:
    """Replace every (left, right) adjacency, left to right, non-overlapping."""
    out: list[str] = []
    fired = 0
    i = 0
    n = len(seq)
    merged = left + right
    while i < n:
        if i < n - 1 and seq[i] == left and seq[i + 1] == right:
            out.append(merged)
            fired += 1
            i += 2
        else:
            out.append(seq[i])
            i += 1
    return out, fired


def _line_symbols(line: str) -> list[str]:
    return list(line)


def _word_symbols(line: str) -> list[list[str]]:
    """Symbol sequences for word mode, one per non-empty word.

    Splitting is on single U+0020 so empty words (from doubled or edge
    spaces) are positional; they carry no symbols but their boundaries are
    restored at application time.
    """
    out = []
    for word in line.split(" "):
        if word:
            out.append(list(word) + [WORD_END])
    return out


def _learning_sequences(lines: Iterable[str], mode: str) -> tuple[list[list[str]], list[int], list[list[int]]]:
    """Deduplicate symbol sequences, keeping weights and per-line membership.

    Returns (unique sequences, weights, per-line list of sequence ids) so
    the final learner state can be read back out per input line.
    """
    uniq: dict[tuple[str, ...], int] = {}
    seqs: list[list[str]] = []
    weights: list[int] = []
    line_refs: list[list[int]] = []
    for line in lines:
        if mode == "line":
            ensure_encoded(line)
            per_line = [_line_symbols(line)] if line else []
        else:
            per_line = _word_symbols(line)
        refs = []
        for sym in per_line:
            key = tuple(sym)
            sid = uniq.get(key)
            if sid is None:
                sid = len(seqs)
                uniq[key] = sid
                seqs.append(sym)
                weights.append(0)
            weights[sid] += 1
            refs.append(sid)
        line_refs.append(refs)
    return seqs, weights, line_refs


def _learn(
    seqs: list[list[str]], weights: list[int], n_merges: int, min_frequency: int
) -> list[tuple[str, str]]:
    """Greedy merge loop over weighted unique sequences, in place.

    Pair counts are kept incrementally: a merge only touches sequences
    known to contain the pair, and each touched sequence contributes the
    exact counter delta between its old and new adjacency multisets. A
    lazy max-heap orders candidates by (count, then smallest pair); stale
    entries are discarded on pop by checking against the live count.
    """
    counts: dict[tuple[str, str], int] = {}
    where: dict[tuple[str, str], set[int]] = {}
    for sid, seq in enumerate(seqs):
        w = weights[sid]
        for pair in zip(seq, seq[1:]):
            counts[pair] = counts.get(pair, 0) + w
            where.setdefault(pair, set()).add(sid)

    heap: list[tuple[int, tuple[str, str]]] = [(-c, p) for p, c in counts.items()]
    heapq.heapify(heap)
    merges: list[tuple[str, str]] = []

    while len(merges) < n_merges and heap:
        neg, pair = heapq.heappop(heap)
        count = counts.get(pair, 0)
        if count != -neg:
            continue  # stale heap entry
        if count < min_frequency:
            break
        merges.append(pair)
        left, right = pair
        for sid in sorted(where.get(pair, ())):
            seq = seqs[sid]
            old = Counter(zip(seq, seq[1:]))
            new_seq, fired = _merge_once(seq, left, right)
            if not fired:
                continue
            seqs[sid] = new_seq
            new = Counter(zip(new_seq, new_seq[1:]))
            w = weights[sid]
            for q in old.keys() | new.keys():
                oc = old.get(q, 0)
                nc = new.get(q, 0)
                if nc != oc:
                    updated = counts.get(q, 0) + (nc - oc) * w
                    if updated > 0:
                        counts[q] = updated
                        heapq.heappush(heap, (-updated, q))
                    else:
                        counts.pop(q, None)
                if nc == 0:
                    where.get(q, set()).discard(sid)
                elif oc == 0:
                    where.setdefault(q, set()).add(sid)
        counts.pop(pair, None)
        where.pop(pair, None)
    return merges


def _learn_with_state(
    lines: Sequence[str], n_merges: int, mode: str, min_frequency: int
) -> tuple[MergeTable, list[list[str]]]:
    """Learn a table and also return the final symbol sequence per line."""
    if n_merges < 1:
        raise UsageError("merge count must be a positive integer")
    if min_frequency < 2:
        raise UsageError("min_frequency must be at least 2")
    if mode not in ("line", "word"):
        raise UsageError(f"unknown BPE mode: {mode!r}")
    seqs, weights, line_refs = _learning_sequences(lines, mode)
    merges = _learn(seqs, weights, n_merges, min_frequency)
    table = MergeTable(
        tuple(MergePair(l, r, i) for i, (l, r) in enumerate(merges)),
        mode=mode,
        n_requested=n_merges,
    )
    finals = [[sym for sid in refs for sym in seqs[sid]] for refs in line_refs]
    return table, finals


def learn_bpe(
    lines: Sequence[str], n_merges: int, *, mode: str = "line", min_frequency: int = 2
) -> MergeTable:
    """Learn up to ``n_merges`` merge operations from a corpus.

    In line mode the corpus must be sentinel-encoded (no U+0020). Learning
    stops early once the best pair's frequency falls below
    ``min_frequency``; the table records both the requested and the
    performed count.
    """
    table, _ = _learn_with_state(lines, n_merges, mode, min_frequency)
    return table


def _replay(symbols: list[str], table: MergeTable) -> list[str]:
    """Replay table merges over one symbol sequence, strictly in rank order.

    Only ranks whose pair actually occurs are visited: candidates found in
    the current sequence go into a min-heap of ranks, and a fired merge
    can only enqueue ranks later than itself (an earlier rank's turn has
    already passed, matching a full in-order replay).
    """
    if len(symbols) < 2 or not table.merges:
        return symbols
    rank_of = {(m.left, m.right): m.rank for m in table.merges}
    agenda: list[int] = []
    queued = set()
    for pair in zip(symbols, symbols[1:]):
        r = rank_of.get(pair)
        if r is not None and r not in queued:
            queued.add(r)
            heapq.heappush(agenda, r)
    current = symbols
    while agenda:
        r = heapq.heappop(agenda)
        m = table.merges[r]
        merged, fired = _merge_once(current, m.left, m.right)
        if not fired:
            continue
        current = merged
        for pair in zip(current, current[1:]):
            nr = rank_of.get(pair)
            if nr is not None and nr > r and nr not in queued:
                queued.add(nr)
                heapq.heappush(agenda, nr)
    return current


def _apply_word_mode(line: str, table: MergeTable) -> list[str]:
    """Merge per word, then restore boundaries as sentinel tokens.

    The end-of-word marker is always the last symbol of its word, so after
    merging it is exactly the suffix of the word's final token; stripping
    one suffix occurrence (dropping the token if nothing remains) is
    therefore lossless even if the text itself contains the marker string.
    """
    words = line.split(" ")
    out: list[str] = []
    for i, word in enumerate(words):
        if i > 0:
            out.append(SENTINEL)
        if not word:
            continue
        merged = _replay(list(word) + [WORD_END], table)
        last = merged[-1]
        assert last.endswith(WORD_END)
        stripped = last[: -len(WORD_END)]
        out.extend(merged[:-1])
        if stripped:
            out.append(stripped)
    return out


def apply_bpe(line: str, table: MergeTable) -> SegmentedLine:
    """Segment one line by replaying a learned table's merges in rank order.

    With an empty table this is a character split. Line mode expects
    sentinel-encoded input; word mode expects pre-tokenized text whose
    U+0020 are word boundaries, which come back as sentinel tokens.
    """
    if table.mode == "line":
        ensure_encoded(line)
        tokens = _replay(_line_symbols(line), table)
    else:
        tokens = _apply_word_mode(line, table)
    return SegmentedLine(tuple(tokens), table.scheme())


def save_merge_table(table: MergeTable, path: str | Path) -> None:
    """Write the bit-exact merge table format: header, then one pair per line."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"{_HEADER_PREFIX} mode={table.mode} requested={table.n_requested}\n")
        for m in table.merges:
            fh.write(f"{m.left} {m.right}\n")


def load_merge_table(path: str | Path) -> MergeTable:
    """Parse a saved merge table; load of save is the identity."""
    raw = Path(path).read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise DataError(f"invalid UTF-8 ({exc.reason})", path=str(path)) from exc
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise DataError("empty merge table file (missing header)", path=str(path))
    header = lines[0]
    parts = header.split(" ")
    if (
        len(parts) != 5
        or " ".join(parts[:3]) != _HEADER_PREFIX
        or not parts[3].startswith("mode=")
        or not parts[4].startswith("requested=")
    ):
        raise DataError(f"malformed merge table header: {header!r}", path=str(path), line=1)
    mode = parts[3][len("mode="):]
    try:
        requested = int(parts[4][len("requested="):])
    except ValueError:
        raise DataError(f"malformed requested count in header: {header!r}",
                        path=str(path), line=1) from None
    merges = []
    for i, line in enumerate(lines[1:], start=2):
        if line.count(" ") != 1:
            raise DataError("merge line must be exactly 'left right'", path=str(path), line=i)
        left, right = line.split(" ")
        if not left or not right:
            raise DataError("merge sides must be non-empty", path=str(path), line=i)
        merges.append(MergePair(left, right, len(merges)))
    try:
        return MergeTable(tuple(merges), mode=mode, n_requested=requested)
    except ValueError as exc:
        raise DataError(str(exc), path=str(path)) from exc
