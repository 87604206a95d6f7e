"""Segmentation strategies that need no learned merge table.

Character split (code points or extended grapheme clusters), greedy
longest matching and token-count-minimal maximal matching over a trie
dictionary, a whitespace tokenizer for pre-tokenized text, and an adapter
that drives an external segmenter process over a line protocol.
"""

from __future__ import annotations

import shlex
import subprocess
import unicodedata
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import NamedTuple

import regex as _regex

from .corpus import SchemeId, SegmentedLine, ensure_encoded
from .errors import DataError, ExternalToolError, UsageError

_GRAPHEME = _regex.compile(r"\X")

# Spacing combining marks stay separate tokens (legacy-style clusters):
# a character-level model wants Thai/Lao SARA AM as its own unit, unlike
# extended clusters which glue it to the base consonant.
_SPACING_AM = {"ำ", "ຳ"}


def _grapheme_tokens(line: str) -> list[str]:
    tokens = []
    for cluster in _GRAPHEME.findall(line):
        if len(cluster) == 1:
            tokens.append(cluster)
            continue
        start = 0
        for i in range(1, len(cluster)):
            ch = cluster[i]
            if unicodedata.category(ch) == "Mc" or ch in _SPACING_AM:
                tokens.append(cluster[start:i])
                start = i
        tokens.append(cluster[start:])
    return tokens


class SegmentToken(NamedTuple):
    """A token plus whether it was an out-of-dictionary fallback.

    Unknown tokens are always exactly one code point: when no dictionary
    word starts at a position, that single character is emitted and the
    segmenter advances one position.
    """

    text: str
    unknown: bool = False


class TrieDictionary:
    """Prefix-indexed word list for the matching segmenters.

    Words are stored in a character trie; enumeration at a position yields
    match lengths in increasing order, longest lookup is a single walk.
    """

    def __init__(self, words: Iterable[str] = ()):
        self._root: dict = {}
        self._size = 0
        self.max_word_len = 0
        for w in words:
            self.insert(w)

    @classmethod
    def from_file(cls, path: str | Path) -> "TrieDictionary":
        """One word per line, UTF-8; empty lines skipped, duplicates ignored."""
        trie = cls()
        raw = Path(path).read_bytes()
        chunks = raw.split(b"\n")
        if chunks and chunks[-1] == b"":
            chunks.pop()
        for i, chunk in enumerate(chunks, start=1):
            try:
                word = chunk.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise DataError(f"invalid UTF-8 ({exc.reason})", path=str(path), line=i) from exc
            word = word.strip("\r")
            if word:
                trie.insert(word)
        return trie

    def insert(self, word: str) -> None:
        if not word:
            raise DataError("dictionary words must be non-empty")
        node = self._root
        for ch in word:
            node = node.setdefault(ch, {})
        if None not in node:
            node[None] = True
            self._size += 1
            self.max_word_len = max(self.max_word_len, len(word))

    def __contains__(self, word: str) -> bool:
        node = self._root
        for ch in word:
            node = node.get(ch)
            if node is None:
                return False
        return None in node

    def __len__(self) -> int:
        return self._size

    def match_ends(self, text: str, start: int) -> list[int]:
        """End indices of all dictionary words starting at ``start``, shortest first."""
        ends = []
        node = self._root
        i = start
        n = len(text)
        while i < n:
            node = node.get(text[i])
            if node is None:
                break
            i += 1
            if None in node:
                ends.append(i)
        return ends

    def longest_end(self, text: str, start: int) -> int | None:
        """End index of the longest dictionary word at ``start``, or None."""
        best = None
        node = self._root
        i = start
        n = len(text)
        while i < n:
            node = node.get(text[i])
            if node is None:
                break
            i += 1
            if None in node:
                best = i
        return best


def char_segment(line: str, granularity: str = "codepoint") -> SegmentedLine:
    """Split into one token per code point, or per extended grapheme cluster."""
    ensure_encoded(line)
    if granularity == "codepoint":
        tokens = tuple(line)
    elif granularity == "grapheme":
        tokens = tuple(_grapheme_tokens(line))
    else:
        raise UsageError(f"unknown granularity: {granularity!r}")
    return SegmentedLine(tokens, SchemeId.character())


def longest_match_tokens(line: str, dictionary: TrieDictionary) -> list[SegmentToken]:
    """Greedy left-to-right matching with single-character unknown fallback."""
    tokens = []
    i = 0
    n = len(line)
    while i < n:
        end = dictionary.longest_end(line, i)
        if end is None:
            tokens.append(SegmentToken(line[i], unknown=True))
            i += 1
        else:
            tokens.append(SegmentToken(line[i:end]))
            i = end
    return tokens


def longest_match_segment(line: str, dictionary: TrieDictionary) -> SegmentedLine:
    ensure_encoded(line)
    tokens = tuple(t.text for t in longest_match_tokens(line, dictionary))
    return SegmentedLine(tokens, SchemeId.longest_match())


def maximal_match_tokens(line: str, dictionary: TrieDictionary) -> list[SegmentToken]:
    """Segmentation with the fewest tokens over all possibilities.

    Dynamic programming over suffix positions; cost is (token count,
    unknown count) compared lexicographically, so among minimal-token
    answers the one with fewest unknowns wins. Reconstruction takes the
    longest optimal token at each position from the left, resolving any
    remaining ties.
    """
    n = len(line)
    best: list[tuple[int, int]] = [(0, 0)] * (n + 1)
    for i in range(n - 1, -1, -1):
        nxt = best[i + 1]
        cost = (1 + nxt[0], 1 + nxt[1])  # unknown single code point
        for end in dictionary.match_ends(line, i):
            tail = best[end]
            cand = (1 + tail[0], tail[1])
            if cand < cost:
                cost = cand
        best[i] = cost
    tokens = []
    i = 0
    while i < n:
        target = best[i]
        nxt = best[i + 1]
        choice_end = None
        for end in dictionary.match_ends(line, i):
            tail = best[end]
            if (1 + tail[0], tail[1]) == target:
                choice_end = end  # increasing enumeration leaves the longest
        if choice_end is None:
            assert (1 + nxt[0], 1 + nxt[1]) == target
            tokens.append(SegmentToken(line[i], unknown=True))
            i += 1
        else:
            tokens.append(SegmentToken(line[i:choice_end]))
            i = choice_end
    return tokens


def maximal_match_segment(line: str, dictionary: TrieDictionary) -> SegmentedLine:
    ensure_encoded(line)
    tokens = tuple(t.text for t in maximal_match_tokens(line, dictionary))
    return SegmentedLine(tokens, SchemeId.maximal_match())


_ASCII_PUNCT = set("!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~")


def word_segment(line: str, lowercase: bool = False) -> SegmentedLine:
    """Whitespace tokenization for the source-language side.

    Splits on runs of U+0020, optionally lowercases, and detaches leading
    and trailing ASCII punctuation into their own tokens. This is
    deliberately the one lossy segmenter in the toolkit: it stands in for
    conventional source-side preprocessing, where spaces are delimiters
    rather than content.
    """
    text = line.lower() if lowercase else line
    tokens: list[str] = []
    for chunk in text.split(" "):
        if not chunk:
            continue
        leading = []
        while chunk and chunk[0] in _ASCII_PUNCT:
            leading.append(chunk[0])
            chunk = chunk[1:]
        trailing = []
        while chunk and chunk[-1] in _ASCII_PUNCT:
            trailing.append(chunk[-1])
            chunk = chunk[:-1]
        tokens.extend(leading)
        if chunk:
            tokens.append(chunk)
        tokens.extend(reversed(trailing))
    return SegmentedLine(tuple(tokens), SchemeId.word())


def external_segment(
    lines: Sequence[str],
    command: str | Sequence[str],
    *,
    name: str | None = None,
) -> list[SegmentedLine]:
    """Segment through a child process speaking the line protocol.

    The child reads one sentinel-encoded sentence per line and must write
    one space-delimited token sequence per line, in order, preserving
    every character exactly. Output that does not concatenate back to its
    input line is rejected: a tool that normalizes or drops text would
    silently corrupt alignment otherwise.
    """
    argv = shlex.split(command) if isinstance(command, str) else list(command)
    if not argv:
        raise UsageError("external segmenter command is empty")
    tool = name if name is not None else Path(argv[0]).name
    scheme = SchemeId.external(tool)
    if not lines:
        return []
    for line in lines:
        ensure_encoded(line)
    payload = "".join(line + "\n" for line in lines).encode("utf-8")
    try:
        proc = subprocess.run(argv, input=payload, capture_output=True)
    except OSError as exc:
        raise ExternalToolError(f"cannot run {argv[0]!r}: {exc}") from exc
    if proc.returncode != 0:
        stderr = proc.stderr.decode("utf-8", errors="replace").strip()
        raise ExternalToolError(
            f"{tool} exited with status {proc.returncode}" + (f": {stderr}" if stderr else "")
        )
    try:
        text = proc.stdout.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise DataError(f"{tool} produced invalid UTF-8 ({exc.reason})") from exc
    out_lines = text.split("\n")
    if out_lines and out_lines[-1] == "":
        out_lines.pop()
    if len(out_lines) != len(lines):
        raise DataError(
            f"{tool} returned {len(out_lines)} lines for {len(lines)} input lines"
        )
    result = []
    for i, (src, out) in enumerate(zip(lines, out_lines), start=1):
        tokens = tuple(t for t in out.split(" ") if t)
        if "".join(tokens) != src:
            raise DataError(
                f"{tool} output does not concatenate back to its input", line=i
            )
        result.append(SegmentedLine(tokens, scheme))
    return result
