"""Exact and heuristic search for the largest k-wise t-agreeing family in [q]^n.

Agreement is hereditary (every subfamily of an agreeing family agrees), so the
search grows families one word at a time and never extends an infeasible one.
Feasibility of a new word is tested against the stored agreement masks of all
chosen subsets of size 1..k-1.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from ..errors import Infeasible, OutOfRange
from .words import Family, Word

EXACT_CUBE_CAP = 20
BNB_CUBE_CAP = 4096
GREEDY_CUBE_CAP = 1 << 16


@dataclass(frozen=True)
class SearchOutcome:
    max_size: int
    witness: Family
    exhaustive: bool
    nodes_explored: int


class _NodeLimit(Exception):
    pass


def _popcount_or(masks) -> int:
    acc = 0
    for m in masks:
        acc |= m
    return acc.bit_count()


class _SubsetStack:
    """Agreement masks of all chosen subsets of size < k, with undo support."""

    def __init__(self, k: int, t: int):
        self.k = k
        self.t = t
        self.entries: list[tuple[int, tuple[int, ...]]] = []
        self.marks: list[int] = []

    def fits(self, vec: tuple[int, ...], start: int = 0) -> bool:
        t = self.t
        for _, masks in self.entries[start:]:
            if _popcount_or([a & b for a, b in zip(masks, vec)]) < t:
                return False
        return True

    def push(self, vec: tuple[int, ...]) -> int:
        """Add a word; returns the index where its new subsets begin."""
        start = len(self.entries)
        self.marks.append(start)
        new = [(1, vec)]
        for size, masks in self.entries[:start]:
            if size <= self.k - 2:
                new.append((size + 1, tuple(a & b for a, b in zip(masks, vec))))
        self.entries.extend(e for e in new if e[0] <= self.k - 1)
        return start

    def pop(self) -> None:
        del self.entries[self.marks.pop():]


def _cube(q: int, n: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(1, q + 1), repeat=n))


def _vectors(words, q: int) -> list[tuple[int, ...]]:
    out = []
    for w in words:
        masks = [0] * q
        for pos, s in enumerate(w):
            masks[s - 1] |= 1 << pos
        out.append(tuple(masks))
    return out


def _family(words, idx, q, n) -> Family:
    return Family(q, n, frozenset(Word(words[i], q) for i in idx))


def max_agreeing_family(
    n: int,
    q: int,
    k: int,
    t: int,
    method: str = "branch_and_bound",
    seed: int = 0,
    node_limit: int | None = None,
    restarts: int = 32,
) -> SearchOutcome:
    """Largest k-wise t-agreeing family in [q]^n.

    ``exact`` walks every agreeing subfamily (no bounding) and is limited to
    ``q**n <= 20``. ``branch_and_bound`` prunes with a greedy coloring of the pairwise
    compatibility graph and, for q=2, forces
    the constant word ``1...1`` into the family (flipping the alphabet on a
    coordinate preserves agreement, so any nonempty family has an image
    containing it). ``greedy`` returns a lower bound.
    Hitting ``node_limit`` also yields a lower bound with ``exhaustive=False``.
    """
    if k < 2:
        raise OutOfRange(f"k must be at least 2, got {k}")
    if not 0 <= t <= n:
        raise OutOfRange(f"t must lie in 0..{n}, got {t}")
    if q < 1 or n < 1:
        raise OutOfRange("q and n must be positive")
    size = q**n
    caps = {"exact": EXACT_CUBE_CAP, "branch_and_bound": BNB_CUBE_CAP, "greedy": GREEDY_CUBE_CAP}
    if method not in caps:
        raise ValueError(f"unknown method {method!r}")
    if size > caps[method]:
        raise Infeasible(f"{method} search over q^n = {size} words exceeds cap {caps[method]}", estimate=size)

    words = _cube(q, n)
    if t == 0:
        return SearchOutcome(size, _family(words, range(size), q, n), True, 1)
    vectors = _vectors(words, q)
    if method == "greedy":
        return _greedy(words, vectors, q, n, k, t, seed, restarts)

    stack = _SubsetStack(k, t)
    best: list[int] = []
    chosen: list[int] = []
    nodes = 0

    def tick():
        nonlocal nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise _NodeLimit

    def record():
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)

    def exact(start: int):
        tick()
        record()
        for j in range(start, size):
            if stack.fits(vectors[j]):
                stack.push(vectors[j])
                chosen.append(j)
                exact(j + 1)
                chosen.pop()
                stack.pop()

    # any agreeing family is a clique of the "pair agrees on >= t coordinates" graph,
    # so a proper coloring of the candidates bounds how many of them can join
    adj = _pair_graph(vectors, t)

    def bnb(cands: list[int]):
        tick()
        record()
        order, colors = _color_sort(cands, adj)
        while order:
            if len(chosen) + colors[-1] <= len(best):
                return
            j = order.pop()
            colors.pop()
            first = stack.push(vectors[j])
            chosen.append(j)
            bnb([c for c in order if stack.fits(vectors[c], first)])
            chosen.pop()
            stack.pop()

    exhaustive = True
    try:
        if method == "exact":
            exact(0)
        elif q == 2:
            stack.push(vectors[0])
            chosen.append(0)
            bnb([c for c in range(1, size) if stack.fits(vectors[c], 0)])
        else:
            bnb(list(range(size)))
    except _NodeLimit:
        exhaustive = False
    return SearchOutcome(len(best), _family(words, best, q, n), exhaustive, nodes)


def _pair_graph(vectors, t: int) -> list[int]:
    adj = [0] * len(vectors)
    for a in range(len(vectors)):
        va = vectors[a]
        for b in range(a + 1, len(vectors)):
            if _popcount_or([x & y for x, y in zip(va, vectors[b])]) >= t:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return adj


def _color_sort(cands: list[int], adj: list[int]) -> tuple[list[int], list[int]]:
    """Candidates grouped by greedy color class, with the running color count."""
    classes: list[list[int]] = []
    masks: list[int] = []
    for c in cands:
        for idx, m in enumerate(masks):
            if not adj[c] & m:
                classes[idx].append(c)
                masks[idx] |= 1 << c
                break
        else:
            classes.append([c])
            masks.append(1 << c)
    order, colors = [], []
    for idx, cls in enumerate(classes, 1):
        order.extend(cls)
        colors.extend([idx] * len(cls))
    return order, colors


def _greedy(words, vectors, q, n, k, t, seed, restarts) -> SearchOutcome:
    rng = np.random.default_rng(seed)
    best: list[int] = []
    nodes = 0
    for _ in range(max(1, restarts)):
        stack = _SubsetStack(k, t)
        picked = []
        for j in rng.permutation(len(words)).tolist():
            nodes += 1
            if stack.fits(vectors[j]):
                stack.push(vectors[j])
                picked.append(j)
        if len(picked) > len(best):
            best = picked
    return SearchOutcome(len(best), _family(words, best, q, n), False, nodes)


def bound_report(n: int, q: int, k: int, t: int, method: str = "branch_and_bound") -> dict:
    """Search result next to every closed-form bound that applies to (n, q, t).

    A bound that sits below the searched maximum is flagged rather than
    raised: the ternary formula only holds once t is large.
    """
    from .bounds import ft_ternary_bound, golden_ratio_bound, simplified_ternary_bound

    outcome = max_agreeing_family(n, q, k, t, method=method)
    bounds = {}
    if q == 3 and t >= 1 and n >= 3 * t - 1:
        bounds["ft_ternary"] = ft_ternary_bound(n, t)
    if q == 3 and t >= 1:
        bounds["simplified_ternary"] = simplified_ternary_bound(n, t)
    if q == 2 and k >= 3:
        bounds["golden_ratio"] = golden_ratio_bound(n, t)
    rows = {}
    for name, value in bounds.items():
        holds = outcome.max_size <= math.floor(value) if outcome.exhaustive else None
        rows[name] = {"value": value, "holds": holds}
    return {
        "n": n,
        "q": q,
        "k": k,
        "t": t,
        "oracle": outcome.max_size,
        "exhaustive": outcome.exhaustive,
        "bounds": rows,
        "discrepancy": any(r["holds"] is False for r in rows.values()),
    }
