"""Plain-text family files.

Line 1 is ``family <q> <n>``; each further line holds one word as ``n`` digits
in ``0..q-1``. ``#`` starts a comment. External digit ``d`` is symbol ``d+1``.
"""

from __future__ import annotations

from pathlib import Path

from ..errors import DimensionMismatch
from .words import Family, Word


def dumps_family(family: Family) -> str:
    if family.q > 10:
        raise ValueError("the digit format supports q <= 10")
    lines = [f"family {family.q} {family.n}"]
    lines.extend(family.digits())
    return "\n".join(lines) + "\n"


def loads_family(text: str) -> Family:
    header = None
    words = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 3 or parts[0] != "family":
                raise ValueError(f"line {lineno}: expected 'family <q> <n>', got {raw!r}")
            header = (int(parts[1]), int(parts[2]))
            continue
        q, n = header
        if len(line) != n or not line.isdigit():
            raise DimensionMismatch(f"line {lineno}: word {line!r} is not {n} digits")
        if any(int(c) >= q for c in line):
            raise ValueError(f"line {lineno}: digit outside 0..{q - 1}")
        words.append(Word.from_digits(line, q))
    if header is None:
        raise ValueError("missing 'family <q> <n>' header")
    if len(set(words)) != len(words):
        raise ValueError("duplicate words in family file")
    return Family(header[0], header[1], frozenset(words))


def write_family(family: Family, path: str | Path) -> None:
    Path(path).write_text(dumps_family(family))


def read_family(path: str | Path) -> Family:
    return loads_family(Path(path).read_text())
