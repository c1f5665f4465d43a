"""Up-shifting of binary families toward a monotone (upward-closed) family.

Binary words are handled as integers: bit ``i-1`` is set when coordinate ``i``
carries symbol 2 (the "1" of the usual 0/1 notation).
"""

from __future__ import annotations

from ..errors import BinaryOnly, OutOfRange
from .words import Family, Word


def _require_binary(family: Family) -> None:
    if family.q != 2:
        raise BinaryOnly(f"shifting is defined for q=2, got q={family.q}")


def to_bits(family: Family) -> set[int]:
    return {w.masks()[1] for w in family.members}


def from_bits(bits: set[int], n: int) -> Family:
    return Family(2, n, frozenset(Word(tuple(2 if x >> i & 1 else 1 for i in range(n)), 2) for x in bits))


def _shift_bits(bits: set[int], i: int) -> set[int]:
    flip = 1 << (i - 1)
    out = set()
    for x in bits:
        if not x & flip and (x | flip) not in bits:
            out.add(x | flip)
        else:
            out.add(x)
    return out


def shift_coordinate(family: Family, i: int) -> Family:
    """Push every member with a 0 at coordinate ``i`` up to 1, unless the target is taken.

    The replacement is simultaneous: targets are tested against the input family.
    """
    _require_binary(family)
    if not 1 <= i <= family.n:
        raise OutOfRange(f"coordinate {i} outside 1..{family.n}")
    return from_bits(_shift_bits(to_bits(family), i), family.n)


def monotonize(family: Family, max_passes: int | None = None) -> Family:
    """Repeat passes ``i = 1..n`` of :func:`shift_coordinate` until nothing moves.

    Each pass that changes the family raises the total Hamming weight, so the
    loop terminates after at most ``n * |F|`` passes.
    """
    _require_binary(family)
    bits = to_bits(family)
    passes = 0
    while True:
        before = bits
        for i in range(1, family.n + 1):
            bits = _shift_bits(bits, i)
        passes += 1
        if bits == before:
            break
        if max_passes is not None and passes >= max_passes:
            break
    return from_bits(bits, family.n)


def is_upward_closed(family: Family) -> bool:
    _require_binary(family)
    bits = to_bits(family)
    return all((x | (1 << i)) in bits for x in bits for i in range(family.n))
