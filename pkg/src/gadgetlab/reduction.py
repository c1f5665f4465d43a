"""Label Cover to hypergraph gadgets, held implicitly as an edge predicate.

Two gadgets are supported:

``two_k``
    From a bipartite instance. Every left variable x becomes a cloud
    ``{(x, a) : a in [q]^L}``. For each right variable y and two distinct
    neighbors x1, x2, a set of k vertices from each cloud is an edge when no
    pair of labels (i1, i2) with ``pi1(i1) == pi2(i2)`` sees one symbol on all
    2k words. The set is an edge if this holds for at least one shared y.

``k_plus_one``
    From a layered instance. Every variable x in layer i becomes a cloud over
    ``[q]^{R_i}``. For a constraint x -> y, k vertices of x's cloud and one of
    y's form an edge when for every label r the k+1 symbols
    ``a_1(r), ..., a_k(r), b(pi(r))`` are not all equal.

Vertices have a canonical order: clouds in variable order, words
lexicographically inside a cloud.

Bulk scans do not call :func:`is_edge`. They encode each side of a candidate
tuple as a bitmask over (projected label, symbol) pairs, one bit for every
label where the side is constant. Two sides then block each other exactly
when their masks intersect, so a whole block of candidate tuples is decided
with a single broadcast AND.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Mapping, NamedTuple, Sequence

import numpy as np

from .errors import Infeasible, InvalidAssignment, NotAnEdgeShape
from .hypergraph import Coloring, ExplicitHypergraph, GadgetVertex, count_monochromatic
from .labelcover import BipartiteInstance, LayeredInstance

DEFAULT_CAP = 50_000_000
_CHUNK = 1 << 22


class Block(NamedTuple):
    """All candidate edges between two clouds.

    ``links`` holds one ``(pi_a, pi_b)`` pair per shared right variable for
    two_k blocks and a single ``(pi, identity)`` pair for k_plus_one blocks.
    """

    a: tuple
    b: tuple
    ka: int
    kb: int
    links: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    target_alphabet: int


@dataclass(frozen=True)
class GadgetHypergraph:
    kind: str  # "two_k" | "k_plus_one"
    instance: BipartiteInstance | LayeredInstance
    q: int
    k: int

    def __post_init__(self):
        if self.kind not in ("two_k", "k_plus_one"):
            raise ValueError(f"unknown gadget kind {self.kind!r}")
        if self.q < 2 or self.k < 2:
            raise ValueError("gadgets need q >= 2 and k >= 2")

    @property
    def uniformity(self) -> int:
        return 2 * self.k if self.kind == "two_k" else self.k + 1

    @cached_property
    def clouds(self) -> tuple[tuple, ...]:
        if self.kind == "two_k":
            return tuple(self.instance.left_vars())
        return tuple(self.instance.variables())

    @cached_property
    def _cloud_pos(self) -> dict[tuple, int]:
        return {x: i for i, x in enumerate(self.clouds)}

    def dim(self, var) -> int:
        return self.instance.alphabet(var)

    def cloud_size(self, var) -> int:
        return self.q ** self.dim(var)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for x in self.clouds:
            out.append(acc)
            acc += self.cloud_size(x)
        out.append(acc)
        return tuple(out)

    @property
    def n_vertices(self) -> int:
        return self.offsets[-1]

    def offset(self, var) -> int:
        return self.offsets[self._cloud_pos[var]]

    def cloud_range(self, var) -> range:
        start = self.offset(var)
        return range(start, start + self.cloud_size(var))

    def words(self, dim: int) -> np.ndarray:
        """All words of [q]^dim in lexicographic order, shape (q**dim, dim)."""
        return _cube_words(self.q, dim)

    def vertex_index(self, vertex: GadgetVertex) -> int:
        var, word = vertex
        if var not in self._cloud_pos:
            raise NotAnEdgeShape(f"{var} carries no cloud in this gadget")
        d = self.dim(var)
        if len(word) != d or not all(1 <= s <= self.q for s in word):
            raise NotAnEdgeShape(f"word {word} is not in [{self.q}]^{d}")
        local = 0
        for s in word:
            local = local * self.q + (s - 1)
        return self.offset(var) + local

    def vertex(self, index: int) -> GadgetVertex:
        pos = int(np.searchsorted(self.offsets, index, side="right")) - 1
        if not 0 <= pos < len(self.clouds):
            raise IndexError(f"vertex index {index} outside 0..{self.n_vertices - 1}")
        var = self.clouds[pos]
        row = self.words(self.dim(var))[index - self.offsets[pos]]
        return GadgetVertex(var, tuple(int(s) for s in row))

    def cloud_of(self, index: int) -> tuple:
        return self.vertex(index).var

    def vertex_table(self) -> tuple[GadgetVertex, ...]:
        return tuple(self.vertex(i) for i in range(self.n_vertices))

    @cached_property
    def blocks(self) -> tuple[Block, ...]:
        inst = self.instance
        out = []
        if self.kind == "two_k":
            shared: dict[tuple[int, int], list] = {}
            for v, nbrs in inst.right_neighbors.items():
                for (u1, pi1), (u2, pi2) in itertools.combinations(nbrs, 2):
                    shared.setdefault((u1, u2), []).append((pi1, pi2))
            for (u1, u2), links in sorted(shared.items()):
                out.append(Block(("u", u1), ("u", u2), self.k, self.k, tuple(links), inst.R))
        else:
            for e in inst.edges:
                r_j = inst.alphabets[e.j]
                ident = tuple(range(1, r_j + 1))
                out.append(Block((e.i, e.u), (e.j, e.v), self.k, 1, ((e.pi, ident),), r_j))
        return tuple(out)

    @cached_property
    def _block_index(self) -> dict[tuple, Block]:
        return {(b.a, b.b): b for b in self.blocks}

    def block_between(self, a, b) -> Block | None:
        return self._block_index.get((a, b))


_CUBES: dict[tuple[int, int], np.ndarray] = {}


def _cube_words(q: int, dim: int) -> np.ndarray:
    key = (q, dim)
    if key not in _CUBES:
        arr = np.array(list(itertools.product(range(1, q + 1), repeat=dim)), dtype=np.int64)
        _CUBES[key] = arr.reshape(q**dim, dim)
    return _CUBES[key]


def build_2k_gadget(lc: BipartiteInstance, q: int, k: int) -> GadgetHypergraph:
    """2k-uniform gadget over clouds [q]^L, one per left variable."""
    if not isinstance(lc, BipartiteInstance):
        raise TypeError("build_2k_gadget expects a bipartite instance")
    return GadgetHypergraph("two_k", lc, q, k)


def build_k1_gadget(lc: LayeredInstance, q: int, k: int) -> GadgetHypergraph:
    """(k+1)-uniform gadget over clouds [q]^{R_i}, one per variable of every layer."""
    if not isinstance(lc, LayeredInstance):
        raise TypeError("build_k1_gadget expects a layered instance")
    return GadgetHypergraph("k_plus_one", lc, q, k)


# -- the predicate, straight from the definition ---------------------------------


def _split_shape(g: GadgetHypergraph, vertices: Sequence[GadgetVertex]):
    if len(vertices) != g.uniformity:
        raise NotAnEdgeShape(f"expected {g.uniformity} vertices, got {len(vertices)}")
    vertices = [GadgetVertex(v[0], tuple(v[1])) for v in vertices]
    if len(set(vertices)) != len(vertices):
        raise NotAnEdgeShape("vertices must be pairwise distinct")
    for v in vertices:
        g.vertex_index(v)  # validates cloud and word
    groups: dict[tuple, list] = {}
    for v in vertices:
        groups.setdefault(v.var, []).append(v.word)
    if len(groups) != 2:
        raise NotAnEdgeShape(f"an edge spans exactly two clouds, got {len(groups)}")
    (x1, w1), (x2, w2) = sorted(groups.items(), key=lambda kv: g._cloud_pos[kv[0]])
    return x1, w1, x2, w2


def is_edge(g: GadgetHypergraph, vertices: Sequence[GadgetVertex]) -> bool:
    """Whether the vertex set is a hyperedge.

    Raises :class:`NotAnEdgeShape` when the tuple cannot be an edge for
    structural reasons (arity, repeated vertices, wrong clouds, no constraint),
    which is different from a legal shape that fails the symbol condition.
    """
    x1, w1, x2, w2 = _split_shape(g, vertices)
    if g.kind == "two_k":
        if len(w1) != g.k or len(w2) != g.k:
            raise NotAnEdgeShape(f"need {g.k} vertices from each cloud")
        block = g.block_between(x1, x2)
        if block is None:
            raise NotAnEdgeShape(f"{x1} and {x2} share no right neighbor")
        return any(_two_k_condition(w1, w2, pi1, pi2) for pi1, pi2 in block.links)
    if len(w1) == 1 and len(w2) == g.k:
        x1, w1, x2, w2 = x2, w2, x1, w1
    if len(w1) != g.k or len(w2) != 1:
        raise NotAnEdgeShape(f"need {g.k} vertices from one cloud and 1 from another")
    block = g.block_between(x1, x2)
    if block is None:
        raise NotAnEdgeShape(f"no constraint from {x1} to a later-layer {x2}")
    pi = block.links[0][0]
    b = w2[0]
    for r in range(1, len(pi) + 1):
        values = {a[r - 1] for a in w1}
        values.add(b[pi[r - 1] - 1])
        if len(values) < 2:
            return False
    return True


def _two_k_condition(w1, w2, pi1, pi2) -> bool:
    for i1 in range(1, len(pi1) + 1):
        for i2 in range(1, len(pi2) + 1):
            if pi1[i1 - 1] != pi2[i2 - 1]:
                continue
            values = {a[i1 - 1] for a in w1} | {b[i2 - 1] for b in w2}
            if len(values) < 2:
                return False
    return True


# -- vectorized block scanning ---------------------------------------------------------


def _side_signature(words: np.ndarray, combos: np.ndarray, pi: Sequence[int], q: int) -> np.ndarray:
    """Bitmask of (pi(label), symbol) over labels where every word of the combo agrees."""
    vals = words[combos]  # (M, k, dim)
    mono = np.all(vals == vals[:, :1, :], axis=1)
    bits = (np.asarray(pi, dtype=np.int64) - 1)[None, :] * q + (vals[:, 0, :] - 1)
    sig = np.where(mono, np.left_shift(np.int64(1), bits), np.int64(0))
    return np.bitwise_or.reduce(sig, axis=1)


def _check_bits(g: GadgetHypergraph, block: Block) -> None:
    if block.target_alphabet * g.q > 62:
        raise Infeasible(
            f"bulk scanning packs (label, symbol) pairs into 62 bits; "
            f"R*q = {block.target_alphabet * g.q} is too large"
        )


def _combos(pool: np.ndarray, k: int) -> np.ndarray:
    if len(pool) < k:
        return np.empty((0, k), dtype=np.int64)
    return np.array(list(itertools.combinations(pool.tolist(), k)), dtype=np.int64).reshape(-1, k)


def _pools(g: GadgetHypergraph, allowed: np.ndarray | None) -> dict[tuple, np.ndarray]:
    """Local indices (within each cloud) of the vertices a scan may use."""
    out = {}
    for x in g.clouds:
        size = g.cloud_size(x)
        if allowed is None:
            out[x] = np.arange(size, dtype=np.int64)
        else:
            start = g.offset(x)
            out[x] = np.nonzero(allowed[start:start + size])[0].astype(np.int64)
    return out


def scan_cost(g: GadgetHypergraph, allowed: np.ndarray | None = None) -> int:
    """Number of (tuple, link) predicate evaluations an exhaustive scan performs."""
    pools = _pools(g, allowed)
    return sum(
        math.comb(len(pools[b.a]), b.ka) * math.comb(len(pools[b.b]), b.kb) * len(b.links) for b in g.blocks
    )


def _scan_blocks(
    g: GadgetHypergraph, allowed: np.ndarray | None, cap: int, lazy: bool = False
) -> Iterator[tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """Yield (global combos side a, global combos side b, edge matrix) chunks over all blocks.

    The full cost is checked against ``cap`` up front, unless ``lazy`` is set
    for callers that may stop early; those are charged as chunks are produced.
    """
    cost = scan_cost(g, allowed)
    if cost > cap and not lazy:
        raise Infeasible(f"exhaustive scan needs {cost} predicate evaluations, cap is {cap}", estimate=cost)
    spent = 0
    pools = _pools(g, allowed)
    for block in g.blocks:
        ca, cb = _combos(pools[block.a], block.ka), _combos(pools[block.b], block.kb)
        if not len(ca) or not len(cb):
            continue
        _check_bits(g, block)
        wa, wb = g.words(g.dim(block.a)), g.words(g.dim(block.b))
        sigs = [(_side_signature(wa, ca, pa, g.q), _side_signature(wb, cb, pb, g.q)) for pa, pb in block.links]
        off_a, off_b = g.offset(block.a), g.offset(block.b)
        step = max(1, _CHUNK // len(cb))
        for lo in range(0, len(ca), step):
            hi = min(len(ca), lo + step)
            edge = np.zeros((hi - lo, len(cb)), dtype=bool)
            spent += edge.size * len(sigs)
            if spent > cap:
                raise Infeasible(
                    f"exhaustive scan needs {cost} predicate evaluations, cap is {cap}", estimate=cost
                )
            for sa, sb in sigs:
                edge |= (sa[lo:hi, None] & sb[None, :]) == 0
            yield ca[lo:hi] + off_a, cb + off_b, edge


def _sample_block_tuples(g: GadgetHypergraph, allowed: np.ndarray | None, count: int, rng):
    """Yield (global combos a, global combos b, edge flags) for uniformly drawn legal tuples."""
    pools = _pools(g, allowed)
    weights = np.array(
        [math.comb(len(pools[b.a]), b.ka) * math.comb(len(pools[b.b]), b.kb) for b in g.blocks], dtype=float
    )
    if not len(weights) or weights.sum() == 0:
        return
    per_block = rng.multinomial(count, weights / weights.sum())
    for block, n in zip(g.blocks, per_block.tolist()):
        if not n:
            continue
        _check_bits(g, block)
        ca = _random_subsets(pools[block.a], block.ka, n, rng)
        cb = _random_subsets(pools[block.b], block.kb, n, rng)
        wa, wb = g.words(g.dim(block.a)), g.words(g.dim(block.b))
        edge = np.zeros(n, dtype=bool)
        for pa, pb in block.links:
            edge |= (_side_signature(wa, ca, pa, g.q) & _side_signature(wb, cb, pb, g.q)) == 0
        yield ca + g.offset(block.a), cb + g.offset(block.b), edge


def _random_subsets(pool: np.ndarray, k: int, n: int, rng) -> np.ndarray:
    out = np.empty((0, k), dtype=np.int64)
    while len(out) < n:
        draw = rng.integers(0, len(pool), size=(2 * (n - len(out)) + 8, k))
        s = np.sort(draw, axis=1)
        ok = np.all(s[:, 1:] != s[:, :-1], axis=1) if k > 1 else np.ones(len(s), dtype=bool)
        out = np.vstack([out, pool[s[ok]]])
    return out[:n]


# -- colorings ----------------------------------------------------------------------


def completeness_coloring(g: GadgetHypergraph, A: Mapping[tuple, int]) -> Coloring:
    """Color every vertex (x, a) with a(A(x))."""
    colors = np.empty(g.n_vertices, dtype=np.int64)
    for x in g.clouds:
        if x not in A:
            raise InvalidAssignment(f"assignment has no label for {x}")
        label = A[x]
        if not 1 <= label <= g.dim(x):
            raise InvalidAssignment(f"label {label} of {x} outside 1..{g.dim(x)}")
        start = g.offset(x)
        colors[start:start + g.cloud_size(x)] = g.words(g.dim(x))[:, label - 1]
    return Coloring(tuple(colors.tolist()), g.q)


@dataclass(frozen=True)
class ColoringReport:
    monochromatic: float  # exact count when exhaustive, estimate otherwise
    witness: tuple[int, ...] | None
    evaluated: int
    exhaustive: bool
    probes_hit: int = 0

    def to_json(self) -> dict:
        return {
            "monochromatic": self.monochromatic,
            "witness": [v + 1 for v in self.witness] if self.witness else None,
            "evaluated": self.evaluated,
            "exhaustive": self.exhaustive,
        }


def verify_coloring(
    g: GadgetHypergraph | ExplicitHypergraph,
    coloring: Coloring,
    mode: str = "exhaustive",
    samples: int = 100_000,
    seed: int = 0,
    cap: int = DEFAULT_CAP,
) -> ColoringReport:
    """Count monochromatic edges.

    Exhaustive mode on a gadget only visits tuples that are monochromatic to
    begin with (color class by color class), so the count is exact. Sampled
    mode draws legal tuples uniformly and scales the monochromatic-edge hit
    rate by the number of legal tuples.
    """
    if isinstance(g, ExplicitHypergraph):
        count, witness = count_monochromatic(g, coloring)
        return ColoringReport(count, witness, len(g.edges), True)
    if len(coloring) != g.n_vertices:
        raise ValueError("coloring does not cover the gadget's vertex set")
    col = coloring.array()
    if mode == "exhaustive":
        count, witness, evaluated = 0, None, 0
        for c in range(1, coloring.num_colors + 1):
            allowed = col == c
            for ga, gb, edge in _scan_blocks(g, allowed, cap - evaluated):
                evaluated += edge.size
                hits = int(edge.sum())
                if hits and witness is None:
                    r, s = np.argwhere(edge)[0]
                    witness = tuple(sorted(ga[r].tolist() + gb[s].tolist()))
                count += hits
        return ColoringReport(count, witness, evaluated, True)
    if mode != "sampled":
        raise ValueError(f"unknown mode {mode!r}")
    rng = np.random.default_rng(seed)
    total = sum(math.comb(g.cloud_size(b.a), b.ka) * math.comb(g.cloud_size(b.b), b.kb) for b in g.blocks)
    hits, witness = 0, None
    for ga, gb, edge in _sample_block_tuples(g, None, samples, rng):
        both = np.concatenate([ga, gb], axis=1)
        c = col[both]
        mono = edge & np.all(c == c[:, :1], axis=1)
        hits += int(mono.sum())
        if witness is None and mono.any():
            witness = tuple(sorted(both[np.argmax(mono)].tolist()))
    estimate = hits / samples * total if samples else 0.0
    return ColoringReport(estimate, witness, samples, False, hits)


# -- materialization -----------------------------------------------------------------


def materialize(
    g: GadgetHypergraph,
    max_vertices: int = 100_000,
    max_edges: int = 5_000_000,
    cap: int = DEFAULT_CAP,
) -> ExplicitHypergraph:
    """Enumerate every edge; edges are sorted vertex tuples in lexicographic order."""
    if g.n_vertices > max_vertices:
        raise Infeasible(f"{g.n_vertices} vertices exceed the cap {max_vertices}", estimate=g.n_vertices)
    edges = []
    for ga, gb, edge in _scan_blocks(g, None, cap):
        rows, cols = np.nonzero(edge)
        if len(edges) + len(rows) > max_edges:
            raise Infeasible(f"more than {max_edges} edges", estimate=len(edges) + len(rows))
        both = np.sort(np.concatenate([ga[rows], gb[cols]], axis=1), axis=1)
        edges.extend(map(tuple, both.tolist()))
    edges.sort()
    return ExplicitHypergraph(g.n_vertices, tuple(edges), g.uniformity, g.vertex_table())


def gadget_summary(g: GadgetHypergraph) -> dict:
    return {
        "kind": g.kind,
        "q": g.q,
        "k": g.k,
        "uniformity": g.uniformity,
        "clouds": len(g.clouds),
        "vertices": g.n_vertices,
        "blocks": len(g.blocks),
        "candidate_tuples": scan_cost(g),
    }
