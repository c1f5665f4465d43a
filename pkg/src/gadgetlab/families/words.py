"""Words over [q], families of words, and agreement predicates.

Symbols are 1-based (``1..q``) and so are coordinates. Internally every word
is also kept as a tuple of ``q`` bitmasks, one per symbol, where bit ``i-1`` of
mask ``v-1`` is set when the word carries symbol ``v`` at coordinate ``i``.
The agreement of a set of words is then the union over symbols of the
intersection of their masks, which makes the k-wise checks cheap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from ..errors import BinaryOnly, DimensionMismatch, FamilyTooSmall, OutOfRange


@dataclass(frozen=True, order=True)
class Word:
    """A string in [q]^n with 1-based symbols."""

    symbols: tuple[int, ...]
    q: int

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(int(s) for s in self.symbols))
        if self.q < 1:
            raise ValueError(f"alphabet size must be positive, got q={self.q}")
        if not self.symbols:
            raise ValueError("words must have positive length")
        bad = [s for s in self.symbols if not 1 <= s <= self.q]
        if bad:
            raise ValueError(f"symbols {bad} outside 1..{self.q}")

    @classmethod
    def parse(cls, text: str, q: int) -> "Word":
        """Read a word written with 1-based digits, e.g. ``Word.parse("112", 3)``."""
        return cls(tuple(int(c) for c in text), q)

    @classmethod
    def from_digits(cls, text: str, q: int) -> "Word":
        """Read a word written with 0-based digits, e.g. ``"0110"`` over q=2."""
        return cls(tuple(int(c) + 1 for c in text), q)

    @property
    def n(self) -> int:
        return len(self.symbols)

    def at(self, i: int) -> int:
        """Symbol at 1-based coordinate ``i``."""
        return self.symbols[i - 1]

    def digits(self) -> str:
        return "".join(str(s - 1) for s in self.symbols)

    def masks(self) -> tuple[int, ...]:
        return _masks(self.symbols, self.q)

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return self.digits() if self.q <= 10 else ",".join(map(str, self.symbols))


def _masks(symbols: Sequence[int], q: int) -> tuple[int, ...]:
    out = [0] * q
    for pos, s in enumerate(symbols):
        out[s - 1] |= 1 << pos
    return tuple(out)


def _mask_to_coords(mask: int) -> frozenset[int]:
    coords = []
    pos = 1
    while mask:
        if mask & 1:
            coords.append(pos)
        mask >>= 1
        pos += 1
    return frozenset(coords)


def _agree_mask(masks: Sequence[int]) -> int:
    acc = 0
    for m in masks:
        acc |= m
    return acc


@dataclass(frozen=True)
class Family:
    """A set of distinct words sharing alphabet size ``q`` and length ``n``."""

    q: int
    n: int
    members: frozenset[Word] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        for w in self.members:
            if w.q != self.q or w.n != self.n:
                raise DimensionMismatch(
                    f"word {w} has (q={w.q}, n={w.n}), family expects (q={self.q}, n={self.n})"
                )

    @classmethod
    def of(cls, words: Iterable[Word], q: int | None = None, n: int | None = None) -> "Family":
        words = list(words)
        if q is None or n is None:
            if not words:
                raise ValueError("q and n are required for an empty family")
            q = words[0].q if q is None else q
            n = words[0].n if n is None else n
        return cls(q, n, frozenset(words))

    @classmethod
    def from_digits(cls, rows: Iterable[str], q: int) -> "Family":
        words = [Word.from_digits(r, q) for r in rows]
        if not words:
            raise ValueError("cannot infer n from an empty list")
        return cls.of(words, q=q)

    @classmethod
    def cube(cls, q: int, n: int) -> "Family":
        return cls(q, n, frozenset(Word(s, q) for s in itertools.product(range(1, q + 1), repeat=n)))

    def sorted(self) -> list[Word]:
        return sorted(self.members)

    def digits(self) -> list[str]:
        return [w.digits() for w in self.sorted()]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.sorted())

    def __contains__(self, w: object) -> bool:
        return w in self.members


def _check_same_shape(words: Sequence[Word]) -> None:
    q, n = words[0].q, words[0].n
    for w in words[1:]:
        if w.q != q or w.n != n:
            raise DimensionMismatch(f"cannot compare words of shape (q={q}, n={n}) and (q={w.q}, n={w.n})")


def agreement(*words: Word | Iterable[Word]) -> frozenset[int]:
    """Coordinates (1-based) on which all given words carry the same symbol.

    Accepts either several words or a single iterable of words.
    """
    if len(words) == 1 and not isinstance(words[0], Word):
        words = tuple(words[0])
    if not words:
        raise ValueError("agreement of an empty list is undefined")
    _check_same_shape(words)
    q = words[0].q
    acc = [(1 << words[0].n) - 1] * q
    for w in words:
        acc = [a & m for a, m in zip(acc, w.masks())]
    return _mask_to_coords(_agree_mask(acc))


def _check_params(n: int, k: int, t: int) -> None:
    if k < 2:
        raise OutOfRange(f"k must be at least 2, got {k}")
    if not 0 <= t <= n:
        raise OutOfRange(f"t must lie in 0..{n}, got {t}")


def _all_subsets_meet(vectors: list[tuple[int, ...]], full: tuple[int, ...], k: int, t: int) -> bool:
    """True iff every subset of size 2..k has a combined mask popcount >= t.

    Subset agreement only shrinks as members are added, so it suffices to look
    at subsets of size ``min(k, len(vectors))``; partial subsets of size >= 2
    are checked on the way down and fail early.
    """
    m = len(vectors)
    size = min(k, m)
    if size < 2:
        return True

    def dfs(start: int, depth: int, acc: tuple[int, ...]) -> bool:
        for j in range(start, m - (size - depth) + 1):
            nxt = tuple(a & b for a, b in zip(acc, vectors[j]))
            if depth >= 1 and _agree_mask(nxt).bit_count() < t:
                return False
            if depth + 1 < size and not dfs(j + 1, depth + 1, nxt):
                return False
        return True

    return dfs(0, 0, full)


def is_k_wise_t_agreeing(family: Family, k: int, t: int) -> bool:
    """Every subset of 2..k members agrees on at least ``t`` coordinates."""
    _check_params(family.n, k, t)
    if len(family) <= 1 or t == 0:
        return True
    vectors = [w.masks() for w in family.sorted()]
    full = tuple([(1 << family.n) - 1] * family.q)
    return _all_subsets_meet(vectors, full, k, t)


def is_k_wise_t_intersecting(family: Family, k: int, t: int) -> bool:
    """Binary only: every subset of 2..k members has ``t`` common 1-coordinates.

    The binary symbol ``2`` plays the role of bit 1.
    """
    if family.q != 2:
        raise BinaryOnly(f"intersection is defined for q=2, got q={family.q}")
    _check_params(family.n, k, t)
    if len(family) <= 1 or t == 0:
        return True
    vectors = [(w.masks()[1],) for w in family.sorted()]
    return _all_subsets_meet(vectors, ((1 << family.n) - 1,), k, t)


class LowAgreementTuple(NamedTuple):
    words: tuple[Word, ...]
    agreement: frozenset[int]


def find_low_agreement_tuple(
    family: Family,
    k: int,
    t: int,
    budget: int | None = None,
    seed: int = 0,
) -> LowAgreementTuple | None:
    """Find ``k`` distinct members whose agreement has at most ``t`` coordinates.

    A greedy probe runs first (each step adds the member that shrinks the
    agreement most). If it fails, a combination search follows, limited to
    ``budget`` nodes. With ``budget=None`` the search is exhaustive, so a
    ``None`` result certifies that every k-subset agrees on more than ``t``
    coordinates.
    """
    if k < 1:
        raise OutOfRange(f"k must be positive, got {k}")
    if len(family) < k:
        raise FamilyTooSmall(f"need at least k={k} members, family has {len(family)}")
    words = family.sorted()
    order = np.random.default_rng(seed).permutation(len(words)).tolist()
    words = [words[i] for i in order]
    vectors = [w.masks() for w in words]
    full = tuple([(1 << family.n) - 1] * family.q)

    def result(idx: Sequence[int], acc: tuple[int, ...]) -> LowAgreementTuple:
        return LowAgreementTuple(tuple(words[i] for i in idx), _mask_to_coords(_agree_mask(acc)))

    # greedy probe
    chosen: list[int] = []
    acc = full
    for _ in range(k):
        best, best_acc, best_size = -1, acc, None
        for j, vec in enumerate(vectors):
            if j in chosen:
                continue
            nxt = tuple(a & b for a, b in zip(acc, vec))
            size = _agree_mask(nxt).bit_count()
            if best_size is None or size < best_size:
                best, best_acc, best_size = j, nxt, size
        chosen.append(best)
        acc = best_acc
    if _agree_mask(acc).bit_count() <= t:
        return result(chosen, acc)

    m = len(vectors)
    nodes = 0

    class _Budget(Exception):
        pass

    def dfs(start: int, picked: list[int], acc: tuple[int, ...]):
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise _Budget
        need = k - len(picked)
        if need == 0:
            return result(picked, acc) if _agree_mask(acc).bit_count() <= t else None
        if picked and _agree_mask(acc).bit_count() <= t:
            # any completion keeps the agreement small
            rest = [j for j in range(m) if j not in picked][:need]
            final = acc
            for j in rest:
                final = tuple(a & b for a, b in zip(final, vectors[j]))
            return result(picked + rest, final)
        for j in range(start, m - need + 1):
            nxt = tuple(a & b for a, b in zip(acc, vectors[j]))
            found = dfs(j + 1, picked + [j], nxt)
            if found is not None:
                return found
        return None

    try:
        return dfs(0, [], full)
    except _Budget:
        return None
