import pytest

from segcomb import (
    DataError,
    SchemeId,
    SegmentedLine,
    UsageError,
    combine,
    corpus_stats,
    save_manifest,
)


def seg(tokens, scheme=None):
    return SegmentedLine(tuple(tokens), scheme or SchemeId.character())


def test_combine_two_variants():
    source = [seg(["hello"], SchemeId.word())]
    a = (SchemeId.bpe(10, label="A"), [seg(["ha", "lo"])])
    b = (SchemeId.character(label="B"), [seg(["h", "a", "l", "o"])])
    combined = combine(source, [a, b])
    assert len(combined) == 2
    assert combined.sources()[0].tokens == combined.sources()[1].tokens == ("hello",)
    assert [(s.label, n) for s, n in combined.manifest] == [("A", 1), ("B", 1)]


def test_combine_single_variant_is_identity():
    source = [seg(["a"]), seg(["b"])]
    targets = [seg(["x"]), seg(["y"])]
    combined = combine(source, [(SchemeId.character(), targets)])
    assert combined.sources() == source
    assert combined.targets() == targets


def test_combine_rejects_empty_variant_list():
    with pytest.raises(UsageError):
        combine([seg(["a"])], [])


def test_combine_rejects_length_mismatch():
    source = [seg(["a"]), seg(["b"])]
    bad = (SchemeId.bpe(10, label="short"), [seg(["x"])])
    with pytest.raises(DataError) as exc:
        combine(source, [bad])
    assert "short" in str(exc.value)


def test_combine_is_associative_block_append():
    source = [seg(["s1"]), seg(["s2"])]
    va = (SchemeId.bpe(1, label="a"), [seg(["x"]), seg(["y"])])
    vb = (SchemeId.bpe(2, label="b"), [seg(["p"]), seg(["q"])])
    vc = (SchemeId.bpe(3, label="c"), [seg(["m"]), seg(["n"])])
    all_at_once = combine(source, [va, vb, vc])
    two_then_one = combine(source, [va, vb])
    rebuilt = list(two_then_one.pairs.pairs) + list(combine(source, [vc]).pairs.pairs)
    assert list(all_at_once.pairs.pairs) == rebuilt


def test_stats_examples():
    stats = corpus_stats([seg(["a", "b"]), seg(["a", "c"])])
    assert stats.sentence_count == 2
    assert stats.token_count == 4
    assert stats.distinct_type_count == 3
    assert stats.mean_tokens_per_sentence == 2.0

    empty = corpus_stats([])
    assert empty.sentence_count == 0
    assert empty.token_count == 0
    assert empty.distinct_type_count == 0
    assert empty.mean_tokens_per_sentence == 0.0
    assert empty.duplication_factor == 0.0


def test_stats_duplication_counts_unique_sentences():
    lines = [seg(["ab"]), seg(["a", "b"]), seg(["cd"])]
    # "ab" appears twice (under two segmentations), "cd" once
    assert corpus_stats(lines).duplication_factor == pytest.approx(1.5)


def test_combined_target_types_cover_constituents():
    source = [seg(["s"]) for _ in range(3)]
    va = [seg(["ab"]), seg(["cd"]), seg(["ab"])]
    vb = [seg(["a", "b"]), seg(["c", "d"]), seg(["a", "b"])]
    combined = combine(
        source, [(SchemeId.bpe(5, label="a"), va), (SchemeId.character(label="b"), vb)]
    )
    combined_types = corpus_stats(combined.targets()).distinct_type_count
    assert combined_types >= corpus_stats(va).distinct_type_count
    assert combined_types >= corpus_stats(vb).distinct_type_count
    assert combined_types == 6  # exact union here


def test_manifest_file_format(tmp_path):
    p = tmp_path / "manifest.tsv"
    save_manifest([(SchemeId.character(), 3), (SchemeId.bpe(1000), 3)], p)
    assert p.read_text(encoding="utf-8") == "character\t3\nbpe1000\t3\n"


def test_combined_corpus_manifest_consistency():
    from segcomb import CombinedCorpus, ParallelCorpus

    pairs = ParallelCorpus(((seg(["a"]), seg(["b"])),))
    with pytest.raises(ValueError):
        CombinedCorpus(pairs, ((SchemeId.character(), 2),))
