"""Independence checks, maximum independent sets and proper colorings.

A vertex set S of a hypergraph is independent when no edge lies entirely in S.
The exact solvers work on explicit hypergraphs with vertex sets packed into
Python integers; gadget hypergraphs are only checked, never solved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import Infeasible
from .hypergraph import Coloring, ExplicitHypergraph
from .reduction import DEFAULT_CAP, GadgetHypergraph, _sample_block_tuples, _scan_blocks, _pools

DEFAULT_NODE_LIMIT = 100_000_000


@dataclass(frozen=True)
class IndependenceReport:
    independent: bool
    witness: tuple[int, ...] | None
    evaluated: int
    exhaustive: bool

    def to_json(self) -> dict:
        return {
            "independent": self.independent,
            "witness": [v + 1 for v in self.witness] if self.witness else None,
            "evaluated": self.evaluated,
            "exhaustive": self.exhaustive,
        }


def _as_mask(h, S: Iterable[int]) -> np.ndarray:
    n = h.n_vertices
    mask = np.zeros(n, dtype=bool)
    for v in S:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} outside 0..{n - 1}")
        mask[v] = True
    return mask


def is_independent(
    h: GadgetHypergraph | ExplicitHypergraph,
    S: Iterable[int],
    mode: str = "exhaustive",
    samples: int = 1_000_000,
    seed: int = 0,
    cap: int = DEFAULT_CAP,
) -> IndependenceReport:
    """Check that no edge lies inside S.

    On a gadget, exhaustive mode scans every legal edge shape restricted to
    S and stops at the first edge; the cap only bites when the scan runs
    that long. Sampled mode draws ``samples`` uniform shapes from S and can
    only report "no witness found".
    """
    mask = _as_mask(h, S)
    if isinstance(h, ExplicitHypergraph):
        for e in h.edges:
            if all(mask[v] for v in e):
                return IndependenceReport(False, e, len(h.edges), True)
        return IndependenceReport(True, None, len(h.edges), True)
    if mode == "exhaustive":
        evaluated = 0
        for ga, gb, edge in _scan_blocks(h, mask, cap, lazy=True):
            evaluated += edge.size
            if edge.any():
                r, s = np.argwhere(edge)[0]
                return IndependenceReport(False, tuple(sorted(ga[r].tolist() + gb[s].tolist())), evaluated, True)
        return IndependenceReport(True, None, evaluated, True)
    if mode != "sampled":
        raise ValueError(f"unknown mode {mode!r}")
    rng = np.random.default_rng(seed)
    for ga, gb, edge in _sample_block_tuples(h, mask, samples, rng):
        if edge.any():
            r = int(np.argmax(edge))
            return IndependenceReport(False, tuple(sorted(ga[r].tolist() + gb[r].tolist())), samples, False)
    return IndependenceReport(True, None, samples, False)


def legal_shapes_within(h: GadgetHypergraph, S: Iterable[int]) -> int:
    """Number of legal edge shapes lying inside S (what an exhaustive check would visit)."""
    pools = _pools(h, _as_mask(h, S))
    return sum(math.comb(len(pools[b.a]), b.ka) * math.comb(len(pools[b.b]), b.kb) for b in h.blocks)


# -- maximum independent set --------------------------------------------------------


@dataclass(frozen=True)
class ISResult:
    vertices: frozenset[int]
    size: int
    exact: bool
    alpha: float
    nodes: int = 0

    def to_json(self) -> dict:
        return {
            "vertices": [v + 1 for v in sorted(self.vertices)],
            "size": self.size,
            "exact": self.exact,
            "alpha": self.alpha,
        }


class _Completion:
    """For each vertex v, the other-vertex masks of edges through v.

    v can join a set S exactly when no such mask is contained in S.
    """

    def __init__(self, h: ExplicitHypergraph):
        self.rest: list[list[int]] = [[] for _ in range(h.n_vertices)]
        self.loop = [False] * h.n_vertices
        for e in h.edges:
            full = 0
            for v in e:
                full |= 1 << v
            for v in e:
                rest = full & ~(1 << v)
                if rest == 0:
                    self.loop[v] = True
                self.rest[v].append(rest)

    def can_add(self, v: int, chosen: int) -> bool:
        if self.loop[v]:
            return False
        for m in self.rest[v]:
            if m & ~chosen == 0:
                return False
        return True


def _result(h: ExplicitHypergraph, chosen: Iterable[int], exact: bool, nodes: int = 0) -> ISResult:
    vs = frozenset(chosen)
    alpha = len(vs) / h.n_vertices if h.n_vertices else 0.0
    return ISResult(vs, len(vs), exact, alpha, nodes)


def _greedy_fill(comp: _Completion, order: Iterable[int], chosen: set[int]) -> set[int]:
    mask = sum(1 << v for v in chosen)
    for v in order:
        if v not in chosen and comp.can_add(v, mask):
            chosen.add(v)
            mask |= 1 << v
    return chosen


def max_independent_set(
    h: ExplicitHypergraph,
    method: str = "exact",
    seed: int = 0,
    iters: int = 2000,
    node_limit: int = DEFAULT_NODE_LIMIT,
    initial: Iterable[int] | None = None,
) -> ISResult:
    """Largest independent set.

    ``exact`` finds a smallest hitting set (a vertex set meeting every edge)
    and returns its complement. Hitting-set search branches on an edge that
    is not yet hit, which keeps the tree shallow when independent sets are
    large, as they are in gadget hypergraphs. Hitting ``node_limit`` raises
    :class:`Infeasible` rather than returning a partial answer. ``greedy``
    and ``local_search`` return feasible lower bounds; ``initial`` seeds
    them (it must be independent).
    """
    comp = _Completion(h)
    degree = [len(r) for r in comp.rest]
    order = sorted(range(h.n_vertices), key=lambda v: (degree[v], v))
    start = set(initial or ())
    if start:
        mask = 0
        for v in sorted(start):
            if not comp.can_add(v, mask):
                raise ValueError("initial vertex set is not independent")
            mask |= 1 << v

    if method == "greedy":
        return _result(h, _greedy_fill(comp, order, set(start)), False)
    if method == "local_search":
        return _result(h, _local_search(comp, order, start, seed, iters), False)
    if method != "exact":
        raise ValueError(f"unknown method {method!r}")

    everything = (1 << h.n_vertices) - 1
    greedy = _greedy_fill(comp, order, set(start))
    cover, nodes = _min_hitting_set(h, everything & ~sum(1 << v for v in greedy), node_limit)
    return _result(h, [v for v in range(h.n_vertices) if not cover >> v & 1], True, nodes)


def _min_hitting_set(h: ExplicitHypergraph, incumbent: int, node_limit: int) -> tuple[int, int]:
    """Smallest vertex set meeting every edge, as a bit mask, and the node count.

    Each node picks the unhit edge with the fewest vertices still allowed to
    join the cover; branch i puts its i-th such vertex in the cover and bars
    the earlier ones. A packing of pairwise disjoint unhit edges bounds how
    many more vertices are needed.
    """
    edges = sorted({sum(1 << v for v in e) for e in h.edges}, key=lambda m: (m.bit_count(), m))
    best = [incumbent, incumbent.bit_count()]
    nodes = 0

    def search(cover: int, size: int, barred: int):
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise Infeasible(f"exact independent set search exceeded {node_limit} nodes", estimate=nodes)
        pick_free = None
        packed, packing = 0, 0
        for e in edges:
            if e & cover:
                continue
            free = e & ~barred
            if not free:
                return
            if pick_free is None or free.bit_count() < pick_free.bit_count():
                pick_free = free
            if not e & packed:
                packed |= e
                packing += 1
        if pick_free is None:
            if size < best[1]:
                best[0], best[1] = cover, size
            return
        if size + packing >= best[1]:
            return
        free = pick_free
        while free:
            low = free & -free
            search(cover | low, size + 1, barred)
            barred |= low
            free ^= low

    search(0, 0, 0)
    return best[0], nodes


def _local_search(comp: _Completion, order: list[int], start: set[int], seed: int, iters: int) -> set[int]:
    rng = np.random.default_rng(seed)
    n = len(order)
    current = _greedy_fill(comp, order, set(start))
    best = set(current)
    for _ in range(iters):
        if not current:
            break
        trial = set(current)
        drop = rng.choice(sorted(trial), size=min(len(trial), int(rng.integers(1, 3))), replace=False)
        trial.difference_update(int(v) for v in drop)
        trial = _greedy_fill(comp, [int(v) for v in rng.permutation(n)], trial)
        if len(trial) >= len(current):
            current = trial
            if len(current) > len(best):
                best = set(current)
    return best


# -- proper coloring ----------------------------------------------------------------


@dataclass(frozen=True)
class ColoringSearch:
    coloring: Coloring | None
    nodes: int

    def to_json(self) -> dict:
        return {
            "exists": self.coloring is not None,
            "num_colors": self.coloring.num_colors if self.coloring else None,
            "colors": list(self.coloring.colors) if self.coloring else None,
            "nodes": self.nodes,
        }


def exists_proper_coloring(h: ExplicitHypergraph, c: int, node_limit: int = DEFAULT_NODE_LIMIT) -> ColoringSearch:
    """Backtracking search for a coloring with no monochromatic edge.

    Vertices are colored in order of decreasing degree; a vertex may open at
    most one new color, which removes the symmetry between unused colors.
    Returns ``coloring=None`` when no proper c-coloring exists.
    """
    if c < 1:
        raise ValueError("need at least one color")
    n = h.n_vertices
    inc = h.incidence()
    edges = h.edges
    order = sorted(range(n), key=lambda v: (-len(inc[v]), v))
    pos = {v: i for i, v in enumerate(order)}
    # an edge is checked once, when its last vertex (in order) gets a color
    closing: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for e in edges:
        last = max(e, key=lambda v: pos[v])
        closing[last].append(e)
    colors = [0] * n
    nodes = 0

    def ok(v: int) -> bool:
        col = colors[v]
        return not any(all(colors[u] == col for u in e) for e in closing[v])

    def solve(i: int, used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise Infeasible(f"coloring search exceeded {node_limit} nodes", estimate=nodes)
        if i == n:
            return True
        v = order[i]
        for col in range(1, min(c, used + 1) + 1):
            colors[v] = col
            if ok(v) and solve(i + 1, max(used, col)):
                return True
        colors[v] = 0
        return False

    if solve(0, 0):
        return ColoringSearch(Coloring(tuple(colors), c), nodes)
    return ColoringSearch(None, nodes)
