import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for oracles.py

THAI_WORDS = ["มาก", "ที่", "รถ", "รถไฟ", "ไฟ", "มา", "แล้ว", "ฉัน", "มี", "ใหม่"]

ECHO_CHILD = """\
import sys
for line in sys.stdin:
    line = line.rstrip("\\n")
    print(" ".join(line))
    sys.stdout.flush()
"""


@pytest.fixture
def thai_dict():
    from segcomb import TrieDictionary

    return TrieDictionary(THAI_WORDS)


@pytest.fixture
def echo_child(tmp_path):
    """Command for a child process that splits every code point apart."""
    script = tmp_path / "echo_child.py"
    script.write_text(ECHO_CHILD, encoding="utf-8")
    return [sys.executable, str(script)]


def random_text(rng: random.Random, max_len: int = 40, with_space: bool = True) -> str:
    """Random line mixing Thai, Latin, punctuation and assorted planes.

    Never contains the sentinel, newlines, carriage returns or surrogates,
    matching what a loadable corpus line may hold.
    """
    pools = [
        [chr(c) for c in range(0x0E01, 0x0E5C)],  # Thai block
        list("abcdefghijklmnopqrstuvwxyzABC.,!?'\"-"),
        [chr(c) for c in [0x00E9, 0x4E2D, 0x1F600, 0x0301, 0x200D, 0x0E33]],
    ]
    if with_space:
        pools.append([" "])
    n = rng.randrange(max_len + 1)
    out = []
    for _ in range(n):
        pool = rng.choice(pools)
        out.append(rng.choice(pool))
    text = "".join(out)
    assert "▁" not in text
    return text
