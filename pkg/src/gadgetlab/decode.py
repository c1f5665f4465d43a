"""Turning a large independent set of a gadget back into a Label Cover labeling.

The pipeline for both gadget kinds:

1. clouds holding at least a delta fraction of I are *heavy*;
2. each heavy cloud x contributes k members of I with small agreement, whose
   agreement set is the label list L_x;
3. right-hand (or later-layer) variables pick the label hit most often by
   the projected lists of their neighbors (:func:`star_pick`);
4. left-hand variables pick uniformly from their own list.

The satisfied fraction is reported per random trial, as its mean, and as the
exact expectation over the random choices in step 4.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import EmptyFamily, FamilyTooSmall, HypothesisViolated, NoHeavyClouds, NoLayerPair, NotIndependent
from .families import Family, Word, find_low_agreement_tuple
from .labelcover import BipartiteInstance, LayeredInstance, image, var_key
from .reduction import GadgetHypergraph, is_edge
from .solvers import is_independent

HYPOTHESIS_CHECK_LIMIT = 12


@dataclass(frozen=True)
class DecodeParams:
    delta: float
    k: int
    t: int
    budget: int | None = 100_000
    seed: int = 0
    trials: int = 20
    verify: str = "sampled"  # sampled | exhaustive | none
    probes: int = 1_000_000
    layer_delta: float | None = None  # share of heavy clouds a layer needs; defaults to delta

    def __post_init__(self):
        if not 0 < self.delta <= 1:
            raise ValueError(f"delta must lie in (0, 1], got {self.delta}")
        if self.t < 0:
            raise ValueError(f"t must be non-negative, got {self.t}")
        if self.k < 2:
            raise ValueError(f"k must be at least 2, got {self.k}")
        if self.verify not in ("sampled", "exhaustive", "none"):
            raise ValueError(f"unknown verification mode {self.verify!r}")


# -- star pick ------------------------------------------------------------------------


class StarPick(NamedTuple):
    element: int
    count: int


def _greedy_disjoint(sets: Sequence[frozenset]) -> list[int]:
    chosen: list[int] = []
    covered: set = set()
    for i, s in enumerate(sets):
        if covered.isdisjoint(s):
            chosen.append(i)
            covered |= s
    return chosen


def max_disjoint_subfamily(sets: Sequence[frozenset]) -> list[int]:
    """Indices of a largest pairwise-disjoint subfamily (exact search)."""
    sets = [frozenset(s) for s in sets]
    best: list[int] = []
    chosen: list[int] = []

    def dfs(start: int, covered: frozenset):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        for i in range(start, len(sets)):
            if len(chosen) + len(sets) - i <= len(best):
                return
            if covered.isdisjoint(sets[i]):
                chosen.append(i)
                dfs(i + 1, covered | sets[i])
                chosen.pop()

    dfs(0, frozenset())
    return best


def star_pick(sets: Sequence[Iterable[int]], d: int, t: int | None = None, check: bool = True) -> StarPick:
    """An element lying in at least |sets| / (t(d-1)) of the sets.

    The sets must be such that any d of them contain an intersecting pair.
    A maximal pairwise-disjoint subfamily then has fewer than d members and
    every set meets its union, so some element of that union is popular.
    Ties between elements go to the smallest one.

    With ``check`` the hypothesis is verified exhaustively for up to 12 sets;
    larger families are only checked through the greedy subfamily.
    """
    sets = [frozenset(s) for s in sets]
    if not sets:
        raise EmptyFamily("star_pick needs at least one set")
    if d < 2:
        raise ValueError(f"d must be at least 2, got {d}")
    if any(not s for s in sets):
        raise HypothesisViolated("an empty set meets nothing")
    if t is None:
        t = max(len(s) for s in sets)
    if any(len(s) > t for s in sets):
        raise ValueError(f"a set has more than t={t} elements")
    greedy = _greedy_disjoint(sets)
    if check:
        big = greedy if len(sets) > HYPOTHESIS_CHECK_LIMIT else max_disjoint_subfamily(sets)
        if len(big) >= d:
            raise HypothesisViolated(f"{len(big)} pairwise disjoint sets found, d={d}")
    union = sorted(set().union(*(sets[i] for i in greedy)))
    counts = Counter(x for s in sets for x in s if x in union)
    element = min(union, key=lambda x: (-counts[x], x))
    return StarPick(element, counts[element])


# -- label lists --------------------------------------------------------------------


@dataclass(frozen=True)
class LabelLists:
    heavy: tuple  # every heavy cloud, in cloud order
    lists: dict  # var -> frozenset of labels
    tuples: dict  # var -> k vertex indices inside I
    dropped: tuple  # heavy clouds without a low-agreement tuple

    def to_json(self) -> dict:
        return {
            "heavy": [var_key(x) for x in self.heavy],
            "lists": {var_key(x): sorted(s) for x, s in self.lists.items()},
            "tuples": {var_key(x): [v + 1 for v in tup] for x, tup in self.tuples.items()},
            "dropped": [var_key(x) for x in self.dropped],
        }


def cloud_members(g: GadgetHypergraph, I: Iterable[int]) -> dict:
    """I split by cloud: var -> sorted vertex indices."""
    out: dict = {x: [] for x in g.clouds}
    for v in sorted(set(I)):
        out[g.cloud_of(v)].append(v)
    return out


def cloud_label_lists(g: GadgetHypergraph, I: Iterable[int], params: DecodeParams) -> LabelLists:
    members = cloud_members(g, I)
    heavy, lists, tuples, dropped = [], {}, {}, []
    for x in g.clouds:
        I_x = members[x]
        if not I_x or len(I_x) < params.delta * g.cloud_size(x):
            continue
        heavy.append(x)
        fam = Family.of((Word(g.vertex(v).word, g.q) for v in I_x), g.q, g.dim(x))
        try:
            found = find_low_agreement_tuple(fam, params.k, params.t, params.budget, params.seed)
        except FamilyTooSmall:
            found = None
        if found is None:
            dropped.append(x)
            continue
        lists[x] = found.agreement
        tuples[x] = tuple(sorted(g.vertex_index((x, w.symbols)) for w in found.words))
    if not heavy:
        raise NoHeavyClouds("no cloud reaches the heaviness threshold")
    return LabelLists(tuple(heavy), lists, tuples, tuple(dropped))


def _verify(g: GadgetHypergraph, I, params: DecodeParams) -> None:
    if params.verify == "none":
        return
    rep = is_independent(g, I, params.verify, samples=params.probes, seed=params.seed)
    if not rep.independent:
        raise NotIndependent("the vertex set contains a hyperedge", rep.witness)


def _pick_uniform(rng, labels: frozenset) -> int:
    if not labels:
        return 1
    ordered = sorted(labels)
    return ordered[int(rng.integers(len(ordered)))]


def _expected_hit(labels: frozenset, pi, target: int) -> Fraction:
    if not labels:
        return Fraction(int(pi[0] == target))
    return Fraction(sum(1 for i in labels if pi[i - 1] == target), len(labels))


def _star_label(family: list[frozenset], d: int, t: int) -> int:
    nonempty = [s for s in family if s]
    if not nonempty:
        return 1
    return star_pick(nonempty, d, t=max(t, max(len(s) for s in nonempty)), check=False).element


@dataclass(frozen=True)
class Violation:
    """Two heavy clouds whose projected lists miss each other at y."""

    y: tuple
    x1: tuple
    x2: tuple
    witness: tuple[int, ...]  # 2k vertices of I forming an edge
    witness_is_edge: bool

    def to_json(self) -> dict:
        return {
            "y": var_key(self.y),
            "x1": var_key(self.x1),
            "x2": var_key(self.x2),
            "witness": [v + 1 for v in self.witness],
            "witness_is_edge": self.witness_is_edge,
        }


@dataclass(frozen=True)
class DecodeReport:
    kind: str
    labels: LabelLists
    labeling: dict  # best trial's full assignment
    fractions: tuple[float, ...]  # headline fraction per trial
    all_fractions: tuple[float, ...]  # fraction of every constraint per trial
    expected_fraction: float
    headline_total: int
    violations: tuple[Violation, ...] = ()
    extra: dict = field(default_factory=dict)

    @property
    def mean_fraction(self) -> float:
        return float(np.mean(self.fractions)) if self.fractions else 0.0

    @property
    def best_trial(self) -> int:
        return int(np.argmax(self.fractions)) if self.fractions else -1

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "label_lists": self.labels.to_json(),
            "labeling": {var_key(x): a for x, a in sorted(self.labeling.items(), key=lambda kv: _order(kv[0]))},
            "fractions": list(self.fractions),
            "all_fractions": list(self.all_fractions),
            "mean_fraction": self.mean_fraction,
            "best_trial": self.best_trial,
            "expected_fraction": self.expected_fraction,
            "headline_total": self.headline_total,
            "violations": [v.to_json() for v in self.violations],
        }
        out.update(self.extra)
        return out


def _order(var):
    return (0 if var[0] == "u" else 1, var[1]) if isinstance(var[0], str) else (var[0], var[1])


# -- bipartite ------------------------------------------------------------------------


def cross_intersection(g: GadgetHypergraph, labels: LabelLists) -> list[Violation]:
    """Pairs of listed clouds at a common y whose projected lists are disjoint.

    Each violation carries the union of the two stored tuples; it is an edge
    of the gadget by construction and this is re-checked with :func:`is_edge`.
    """
    inst: BipartiteInstance = g.instance
    out = []
    for y, nbrs in sorted(inst.right_neighbors.items()):
        listed = [(("u", u), pi) for u, pi in nbrs if ("u", u) in labels.lists]
        for a in range(len(listed)):
            for b in range(a + 1, len(listed)):
                (x1, p1), (x2, p2) = listed[a], listed[b]
                if image(p1, labels.lists[x1]) & image(p2, labels.lists[x2]):
                    continue
                witness = tuple(sorted(labels.tuples[x1] + labels.tuples[x2]))
                ok = is_edge(g, [g.vertex(v) for v in witness])
                out.append(Violation(("v", y), x1, x2, witness, ok))
    return out


def decode_bipartite(g: GadgetHypergraph, I: Iterable[int], params: DecodeParams) -> DecodeReport:
    if g.kind != "two_k":
        raise ValueError("decode_bipartite expects a two_k gadget")
    I = sorted(set(I))
    _verify(g, I, params)
    labels = cloud_label_lists(g, I, params)
    inst: BipartiteInstance = g.instance
    violations = cross_intersection(g, labels)

    X = set(labels.lists)
    right_label = {}
    for y, nbrs in inst.right_neighbors.items():
        family = [image(pi, labels.lists[("u", u)]) for u, pi in nbrs if ("u", u) in X]
        if family:
            right_label[("v", y)] = _star_label(family, 2, params.t)

    headline = [e for e in inst.edges if ("u", e.u) in X]
    expected = Fraction(0)
    for e in headline:
        expected += _expected_hit(labels.lists[("u", e.u)], e.pi, right_label[("v", e.v)])

    fractions, all_fractions, labelings = [], [], []
    for trial in range(params.trials):
        rng = np.random.default_rng([params.seed, trial])
        A = {x: 1 for x in inst.variables()}
        A.update(right_label)
        for x in g.clouds:
            if x in X:
                A[x] = _pick_uniform(rng, labels.lists[x])
        sat = [e.pi[A[("u", e.u)] - 1] == A[("v", e.v)] for e in inst.edges]
        hit = sum(1 for e, s in zip(inst.edges, sat) if s and ("u", e.u) in X)
        fractions.append(hit / len(headline) if headline else 0.0)
        all_fractions.append(sum(sat) / len(sat) if sat else 1.0)
        labelings.append(A)
    best = int(np.argmax(fractions)) if fractions else 0
    return DecodeReport(
        "two_k",
        labels,
        labelings[best] if labelings else {},
        tuple(fractions),
        tuple(all_fractions),
        float(expected / len(headline)) if headline else 0.0,
        len(headline),
        tuple(violations),
    )


# -- layered --------------------------------------------------------------------------


def disjoint_subfamilies(sets: Sequence[frozenset], limit: int = 1_000_000) -> Iterable[tuple[int, ...]]:
    """Every nonempty pairwise-disjoint subfamily, as index tuples (at most ``limit``)."""
    produced = 0
    stack: list[int] = []

    def dfs(start: int, covered: frozenset):
        nonlocal produced
        for i in range(start, len(sets)):
            if covered.isdisjoint(sets[i]):
                stack.append(i)
                produced += 1
                if produced > limit:
                    raise OverflowError(f"more than {limit} disjoint subfamilies")
                yield tuple(stack)
                yield from dfs(i + 1, covered | sets[i])
                stack.pop()

    yield from dfs(0, frozenset())


def good_neighbors(g: GadgetHypergraph, labels: LabelLists, y) -> list[tuple]:
    """Listed clouds x with a constraint x -> y that is injective on L_x: (x, projected list)."""
    out = []
    for x, pi in g.instance.in_neighbors.get(y, []):
        if x in labels.lists:
            proj = image(pi, labels.lists[x])
            if len(proj) == len(labels.lists[x]):
                out.append((x, proj))
    return out


@dataclass(frozen=True)
class DensityCheck:
    y: tuple
    s: int
    size: int  # |I_y|
    bound: float
    holds: bool


def check_disjoint_density(
    g: GadgetHypergraph, I: Iterable[int], labels: LabelLists, t: int, limit: int = 1_000_000
) -> list[DensityCheck]:
    """For every y and every pairwise-disjoint subfamily of its good neighbors'
    projected lists, check ``|I_y| <= (1 - ((q-1)/q)^t)^s * |V_y|``.

    Returns one row per (y, subfamily size s) that occurs, with ``holds``
    false when the bound fails. Nonempty lists are required for the bound to
    apply, so empty projected lists are skipped.
    """
    members = cloud_members(g, I)
    miss = ((g.q - 1) / g.q) ** t
    rows = []
    for y in g.clouds:
        nbrs = [proj for _, proj in good_neighbors(g, labels, y) if proj]
        if not nbrs:
            continue
        size = len(members[y])
        seen = set()
        for sub in disjoint_subfamilies(nbrs, limit):
            s = len(sub)
            if s in seen:
                continue
            seen.add(s)
            bound = (1 - miss) ** s * g.cloud_size(y)
            rows.append(DensityCheck(y, s, size, bound, size <= bound + 1e-9))
    return rows


def claim_bound(delta: float, q: int, t: int) -> float | None:
    """``log(1/delta) / delta^(2qc)`` with ``c = t / log(1/delta)``; None at delta = 1."""
    if delta >= 1:
        return None
    lg = math.log(1 / delta)
    c = t / lg
    return lg / delta ** (2 * q * c)


def decode_layered(
    g: GadgetHypergraph, I: Iterable[int], params: DecodeParams, m: int | None = None, T: int | None = None
) -> DecodeReport:
    if g.kind != "k_plus_one":
        raise ValueError("decode_layered expects a k_plus_one gadget")
    inst: LayeredInstance = g.instance
    I = sorted(set(I))
    _verify(g, I, params)
    labels = cloud_label_lists(g, I, params)
    layer_delta = params.delta if params.layer_delta is None else params.layer_delta

    Z = {a: [x for x in inst.layer(a) if x in labels.lists] for a in range(inst.ell)}
    W = [a for a in range(inst.ell) if inst.layer_sizes[a] and len(Z[a]) >= layer_delta * inst.layer_sizes[a]]

    best_pair, best_ratio = None, -1.0
    for a in W:
        for b in W:
            if b <= a:
                continue
            edges = inst.pair_edges.get((a, b), [])
            za, zb = set(Z[a]), set(Z[b])
            inside = sum(1 for e in edges if (a, e.u) in za and (b, e.v) in zb)
            if not inside:
                continue
            ratio = inside / len(edges)
            if ratio > best_ratio:
                best_pair, best_ratio = (a, b), ratio
    if best_pair is None:
        raise NoLayerPair("no pair of heavy layers shares a constraint between listed clouds")
    a, b = best_pair
    za, zb = set(Z[a]), set(Z[b])
    chosen = [e for e in inst.pair_edges[(a, b)] if (a, e.u) in za and (b, e.v) in zb]
    good = [e for e in chosen if len(image(e.pi, labels.lists[(a, e.u)])) == len(labels.lists[(a, e.u)])]
    bad = len(chosen) - len(good)

    families: dict = {}
    for e in good:
        families.setdefault((b, e.v), []).append(image(e.pi, labels.lists[(a, e.u)]))
    s_obs, later_label = {}, {}
    for y, family in sorted(families.items()):
        nonempty = [s for s in family if s]
        s_obs[y] = len(max_disjoint_subfamily(nonempty)) if nonempty else 0
        later_label[y] = _star_label(family, s_obs[y] + 1 if s_obs[y] else 2, params.t)

    expected = Fraction(0)
    for e in chosen:
        y = (b, e.v)
        if y in later_label:
            expected += _expected_hit(labels.lists[(a, e.u)], e.pi, later_label[y])

    fractions, all_fractions, labelings = [], [], []
    for trial in range(params.trials):
        rng = np.random.default_rng([params.seed, trial])
        A = {x: 1 for x in inst.variables()}
        for x in Z[a]:
            A[x] = _pick_uniform(rng, labels.lists[x])
        A.update(later_label)
        hit = sum(1 for e in chosen if e.pi[A[(a, e.u)] - 1] == A[(b, e.v)])
        fractions.append(hit / len(chosen))
        sat = sum(1 for e in inst.edges if e.pi[A[(e.i, e.u)] - 1] == A[(e.j, e.v)])
        all_fractions.append(sat / len(inst.edges) if inst.edges else 1.0)
        labelings.append(A)
    best = int(np.argmax(fractions)) if fractions else 0
    extra = {
        "layers_heavy": W,
        "layer_pair": [a, b],
        "pair_ratio": best_ratio,
        "Z_sizes": {str(i): len(Z[i]) for i in range(inst.ell)},
        "bad_constraints": bad,
        "good_constraints": len(good),
        "disjointness": {var_key(y): s for y, s in sorted(s_obs.items())},
        "max_disjointness": max(s_obs.values(), default=0),
        "claim_bound": claim_bound(params.delta, g.q, params.t),
    }
    if m is not None:
        extra["density_floor"] = 1 / m**2
        extra["meets_density_floor"] = best_ratio >= 1 / m**2
    if T is not None:
        extra["collapse_bound"] = params.t**2 * inst.ell / T
    return DecodeReport(
        "k_plus_one",
        labels,
        labelings[best] if labelings else {},
        tuple(fractions),
        tuple(all_fractions),
        float(expected / len(chosen)),
        len(chosen),
        (),
        extra,
    )
