import random

import pytest
from hypothesis import given, strategies as st

from segcomb import (
    SENTINEL,
    DataError,
    ParallelCorpus,
    SchemeId,
    SegmentedLine,
    detokenize,
    load_corpus,
    load_segmented,
    save_segmented,
    sentinel_decode,
    sentinel_encode,
)

from conftest import random_text


def test_sentinel_encode_examples():
    assert sentinel_encode("a b") == f"a{SENTINEL}b"
    assert sentinel_encode("กข") == "กข"
    assert sentinel_encode("") == ""


def test_sentinel_encode_rejects_reserved_char():
    with pytest.raises(DataError):
        sentinel_encode(f"a{SENTINEL}b")


def test_detokenize_examples():
    scheme = SchemeId.character()
    assert detokenize(SegmentedLine(("มาก", "ที่"), scheme)) == "มากที่"
    assert detokenize(SegmentedLine(("a", SENTINEL, "b"), scheme)) == "a b"
    assert detokenize(SegmentedLine((), scheme)) == ""
    assert detokenize(["x", "y"]) == "xy"


@given(st.text(alphabet=st.characters(exclude_characters="▁", exclude_categories=["Cs"])))
def test_sentinel_round_trip(text):
    assert sentinel_decode(sentinel_encode(text)) == text


def test_segmented_line_rejects_bad_tokens():
    with pytest.raises(ValueError):
        SegmentedLine(("a", ""), SchemeId.character())
    with pytest.raises(ValueError):
        SegmentedLine(("a b",), SchemeId.character())


def test_scheme_labels():
    assert SchemeId.bpe(5000).label == "bpe5000"
    assert SchemeId.character().label == "character"
    assert SchemeId.external("deepcut").label == "external:deepcut"
    assert SchemeId.bpe(10, label="mine").label == "mine"
    with pytest.raises(ValueError):
        SchemeId.bpe(0)
    with pytest.raises(ValueError):
        SchemeId("nonsense")


def test_load_corpus_basic(tmp_path):
    p = tmp_path / "c.txt"
    p.write_bytes(b"ab\ncd\n")
    assert load_corpus(p) == ["ab", "cd"]
    # missing trailing newline tolerated on load
    p.write_bytes(b"ab\ncd")
    assert load_corpus(p) == ["ab", "cd"]
    # empty lines are empty sentences
    p.write_bytes(b"ab\n\ncd\n")
    assert load_corpus(p) == ["ab", "", "cd"]
    p.write_bytes(b"")
    assert load_corpus(p) == []


def test_load_corpus_invalid_utf8_names_line(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_bytes(b"\xff\n")
    with pytest.raises(DataError) as exc:
        load_corpus(p)
    assert exc.value.line == 1
    p.write_bytes(b"ok\nok\n\xffbad\n")
    with pytest.raises(DataError) as exc:
        load_corpus(p)
    assert exc.value.line == 3


def test_load_corpus_rejects_raw_sentinel(tmp_path):
    p = tmp_path / "c.txt"
    p.write_text(f"ok\na{SENTINEL}b\n", encoding="utf-8")
    with pytest.raises(DataError) as exc:
        load_corpus(p)
    assert exc.value.line == 2
    assert load_corpus(p, allow_sentinel=True)[1] == f"a{SENTINEL}b"


def test_load_corpus_rejects_crlf(tmp_path):
    p = tmp_path / "c.txt"
    p.write_bytes(b"ab\r\ncd\r\n")
    with pytest.raises(DataError) as exc:
        load_corpus(p)
    assert exc.value.line == 1


def test_save_segmented_format(tmp_path):
    p = tmp_path / "seg.txt"
    save_segmented([["a", "b"], ["c"]], p)
    assert p.read_bytes() == b"a b\nc\n"


def test_save_load_segmented_round_trip(tmp_path):
    scheme = SchemeId.character()
    corpus = [
        SegmentedLine(("มาก", "ที่"), scheme),
        SegmentedLine((), scheme),
        SegmentedLine(("a", SENTINEL, "b"), scheme),
    ]
    p = tmp_path / "seg.txt"
    save_segmented(corpus, p)
    loaded = load_segmented(p, scheme)
    assert [seg.tokens for seg in loaded] == [seg.tokens for seg in corpus]


def test_load_segmented_rejects_empty_token(tmp_path):
    p = tmp_path / "seg.txt"
    p.write_bytes(b"a  b\n")
    with pytest.raises(DataError) as exc:
        load_segmented(p, SchemeId.character())
    assert exc.value.line == 1


def test_raw_load_save_byte_identity(tmp_path):
    rng = random.Random(7)
    lines = [random_text(rng) for _ in range(50)]
    p = tmp_path / "c.txt"
    p.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    before = p.read_bytes()
    from segcomb import save_lines

    q = tmp_path / "c2.txt"
    save_lines(load_corpus(p), q)
    assert q.read_bytes() == before


def test_parallel_corpus_alignment():
    scheme = SchemeId.character()
    a = SegmentedLine(("a",), scheme)
    with pytest.raises(DataError):
        ParallelCorpus.from_sides([a, a], [a])
    pc = ParallelCorpus.from_sides([a], [a])
    assert len(pc) == 1
