"""Command-line surface binding the toolkit into one pipeline.

Exit codes: 0 success, 1 usage error, 2 data error, 3 external tool
failure. Diagnostics go to stderr; data goes to files or stdout, never
mixed. Every subcommand is deterministic: identical inputs and flags
produce byte-identical outputs. ``--input -`` reads standard input where
a single input file is expected.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bpe as bpe_mod
from . import chrf as chrf_mod
from .combine import combine, corpus_stats, save_manifest
from .corpus import (
    SchemeId,
    detokenize,
    load_corpus,
    load_segmented,
    save_lines,
    save_segmented,
    sentinel_encode,
)
from .errors import DataError, ExternalToolError, UsageError
from .segmenters import (
    TrieDictionary,
    char_segment,
    external_segment,
    longest_match_segment,
    maximal_match_segment,
    word_segment,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_EXTERNAL = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit 2; usage errors are exit 1
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="segcomb", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("learn-bpe", help="learn a BPE merge table from a corpus")
    p.add_argument("--input", required=True)
    p.add_argument("--merges", required=True, type=int)
    p.add_argument("--mode", choices=["line", "word"], default="line")
    p.add_argument("--min-freq", type=int, default=2)
    p.add_argument("--output", required=True)

    p = sub.add_parser("apply-bpe", help="segment a corpus with a learned merge table")
    p.add_argument("--merges", required=True, help="merge table file")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)

    p = sub.add_parser("segment", help="segment a corpus without a merge table")
    p.add_argument(
        "--method", required=True, choices=["char", "longest", "maximal", "external", "word"]
    )
    p.add_argument("--granularity", choices=["codepoint", "grapheme"], default="codepoint")
    p.add_argument("--dict", dest="dict_path", help="dictionary file (longest/maximal)")
    p.add_argument("--cmd", help="external segmenter command (external)")
    p.add_argument("--lowercase", action="store_true", help="lowercase (word)")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)

    p = sub.add_parser("combine", help="append target variants over a fixed source")
    p.add_argument("--source", required=True, help="segmented source corpus")
    p.add_argument("--target", action="append", required=True,
                   help="segmented target corpus; repeat once per variant")
    p.add_argument("--out-source", required=True)
    p.add_argument("--out-target", required=True)
    p.add_argument("--manifest", help="optional provenance TSV")

    p = sub.add_parser("chrf", help="character n-gram F-score of hypothesis vs reference")
    p.add_argument("--hyp", required=True)
    p.add_argument("--ref", required=True)
    p.add_argument("--beta", type=float, default=chrf_mod.DEFAULT_BETA)
    p.add_argument("--order", type=int, default=chrf_mod.DEFAULT_MAX_ORDER)
    p.add_argument("--whitespace", choices=["strip", "keep"], default="strip")
    p.add_argument("--segment-scores", help="optional per-segment TSV output")

    p = sub.add_parser("stats", help="token/type statistics of a segmented corpus")
    p.add_argument("--input", required=True)

    p = sub.add_parser("detokenize", help="reconstruct raw text from a segmented corpus")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)

    return parser


def _cmd_learn_bpe(args) -> int:
    lines = load_corpus(args.input)
    if args.mode == "line":
        lines = [sentinel_encode(line) for line in lines]
    table = bpe_mod.learn_bpe(lines, args.merges, mode=args.mode, min_frequency=args.min_freq)
    bpe_mod.save_merge_table(table, args.output)
    return EXIT_OK


def _cmd_apply_bpe(args) -> int:
    table = bpe_mod.load_merge_table(args.merges)
    lines = load_corpus(args.input)
    if table.mode == "line":
        lines = [sentinel_encode(line) for line in lines]
    save_segmented((bpe_mod.apply_bpe(line, table) for line in lines), args.output)
    return EXIT_OK


def _cmd_segment(args) -> int:
    lines = load_corpus(args.input)
    if args.method == "word":
        segs = [word_segment(line, args.lowercase) for line in lines]
    else:
        encoded = [sentinel_encode(line) for line in lines]
        if args.method == "char":
            segs = [char_segment(line, args.granularity) for line in encoded]
        elif args.method in ("longest", "maximal"):
            if not args.dict_path:
                raise UsageError(f"--method {args.method} requires --dict")
            trie = TrieDictionary.from_file(args.dict_path)
            match = longest_match_segment if args.method == "longest" else maximal_match_segment
            segs = [match(line, trie) for line in encoded]
        else:
            if not args.cmd:
                raise UsageError("--method external requires --cmd")
            segs = external_segment(encoded, args.cmd)
    save_segmented(segs, args.output)
    return EXIT_OK


def _load_segmented_file(path: str) -> list:
    # Loaded files get an external scheme named after the file; the real
    # provenance lives outside this process.
    name = Path(path).name if path != "-" else "stdin"
    return load_segmented(path, SchemeId.external(name=name, label=name))


def _cmd_combine(args) -> int:
    source = _load_segmented_file(args.source)
    variants = []
    for target_path in args.target:
        name = Path(target_path).name
        scheme = SchemeId.external(name=name, label=name)
        variants.append((scheme, load_segmented(target_path, scheme)))
    combined = combine(source, variants)
    save_segmented(combined.sources(), args.out_source)
    save_segmented(combined.targets(), args.out_target)
    if args.manifest:
        save_manifest(combined.manifest, args.manifest)
    return EXIT_OK


def _cmd_chrf(args) -> int:
    hyp = load_corpus(args.hyp, allow_sentinel=True)
    ref = load_corpus(args.ref, allow_sentinel=True)
    report = chrf_mod.corpus_chrf(
        hyp, ref, beta=args.beta, max_order=args.order, whitespace=args.whitespace
    )
    if args.segment_scores:
        with open(args.segment_scores, "w", encoding="utf-8", newline="\n") as fh:
            for i, score in enumerate(report.segment_scores, start=1):
                fh.write(f"{i}\t{score:.4f}\n")
    print(chrf_mod.format_score_line(report.corpus_score, args.beta))
    return EXIT_OK


def _cmd_stats(args) -> int:
    stats = corpus_stats(_load_segmented_file(args.input))
    print(f"sentences = {stats.sentence_count}")
    print(f"tokens = {stats.token_count}")
    print(f"types = {stats.distinct_type_count}")
    print(f"mean_tokens_per_sentence = {stats.mean_tokens_per_sentence:.4f}")
    print(f"duplication_factor = {stats.duplication_factor:.4f}")
    return EXIT_OK


def _cmd_detokenize(args) -> int:
    save_lines((detokenize(seg) for seg in _load_segmented_file(args.input)), args.output)
    return EXIT_OK


_COMMANDS = {
    "learn-bpe": _cmd_learn_bpe,
    "apply-bpe": _cmd_apply_bpe,
    "segment": _cmd_segment,
    "combine": _cmd_combine,
    "chrf": _cmd_chrf,
    "stats": _cmd_stats,
    "detokenize": _cmd_detokenize,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"segcomb: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"segcomb: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ExternalToolError as exc:
        print(f"segcomb: external tool error: {exc}", file=sys.stderr)
        return EXIT_EXTERNAL
    except OSError as exc:
        print(f"segcomb: data error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
