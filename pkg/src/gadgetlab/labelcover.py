"""Bipartite and multi-layered Label Cover: data model, planted generators, checkers.

Variable ids
------------
Bipartite instances use ``("u", i)`` for left variables and ``("v", j)`` for
right variables; layered instances use ``(layer, i)``. Indices and layers are
0-based; labels are 1-based. In JSON the ids become ``"u:3"``, ``"v:0"`` and
``"2:5"``.

A projection map is stored as a tuple ``pi`` of length equal to the source
alphabet, with ``pi[i-1]`` the image of label ``i``.
"""

from __future__ import annotations

import itertools
import json
import math
import warnings
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping, NamedTuple

import numpy as np

from .errors import InvalidAssignment, InvalidConfig, InvalidInstance, OutOfRange

Var = tuple
Assignment = dict


def image(pi: tuple[int, ...], labels: Iterable[int]) -> frozenset[int]:
    return frozenset(pi[i - 1] for i in labels)


class Constraint(NamedTuple):
    u: int
    v: int
    pi: tuple[int, ...]


class LayeredConstraint(NamedTuple):
    i: int
    j: int
    u: int
    v: int
    pi: tuple[int, ...]


@dataclass(frozen=True)
class BipartiteInstance:
    n_left: int
    n_right: int
    L: int
    R: int
    edges: tuple[Constraint, ...] = ()

    def __post_init__(self):
        edges = tuple(Constraint(int(e[0]), int(e[1]), tuple(int(x) for x in e[2])) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        if min(self.n_left, self.n_right, self.L, self.R) < 1:
            raise InvalidInstance("sizes and alphabets must be positive")
        seen = set()
        for e in edges:
            if not (0 <= e.u < self.n_left and 0 <= e.v < self.n_right):
                raise InvalidInstance(f"constraint {e.u}->{e.v} references a missing variable")
            if (e.u, e.v) in seen:
                raise InvalidInstance(f"duplicate constraint between u:{e.u} and v:{e.v}")
            seen.add((e.u, e.v))
            if len(e.pi) != self.L or not all(1 <= r <= self.R for r in e.pi):
                raise InvalidInstance(f"map on u:{e.u}->v:{e.v} is not a function [L]->[R]")

    kind = "bipartite"

    def left_vars(self) -> list[Var]:
        return [("u", i) for i in range(self.n_left)]

    def right_vars(self) -> list[Var]:
        return [("v", j) for j in range(self.n_right)]

    def variables(self) -> list[Var]:
        return self.left_vars() + self.right_vars()

    def alphabet(self, var: Var) -> int:
        return self.L if var[0] == "u" else self.R

    @cached_property
    def right_neighbors(self) -> dict[int, list[tuple[int, tuple[int, ...]]]]:
        """v -> [(u, pi), ...] sorted by u."""
        out: dict[int, list] = defaultdict(list)
        for e in self.edges:
            out[e.v].append((e.u, e.pi))
        return {v: sorted(lst) for v, lst in sorted(out.items())}

    @cached_property
    def left_neighbors(self) -> dict[int, list[tuple[int, tuple[int, ...]]]]:
        out: dict[int, list] = defaultdict(list)
        for e in self.edges:
            out[e.u].append((e.v, e.pi))
        return {u: sorted(lst) for u, lst in sorted(out.items())}

    def degree_stats(self) -> dict:
        left = [len(self.left_neighbors.get(u, ())) for u in range(self.n_left)]
        right = [len(self.right_neighbors.get(v, ())) for v in range(self.n_right)]
        return {
            "left_min": min(left), "left_max": max(left),
            "right_min": min(right), "right_max": max(right),
            "biregular": min(left) == max(left) and min(right) == max(right),
        }

    def is_biregular(self) -> bool:
        return self.degree_stats()["biregular"]


@dataclass(frozen=True)
class LayeredInstance:
    layer_sizes: tuple[int, ...]
    alphabets: tuple[int, ...]
    edges: tuple[LayeredConstraint, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "layer_sizes", tuple(int(s) for s in self.layer_sizes))
        object.__setattr__(self, "alphabets", tuple(int(r) for r in self.alphabets))
        edges = tuple(LayeredConstraint(*(int(x) for x in e[:4]), tuple(int(x) for x in e[4])) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        if len(self.layer_sizes) != len(self.alphabets):
            raise InvalidInstance("one alphabet per layer is required")
        if any(s < 1 for s in self.layer_sizes) or any(r < 1 for r in self.alphabets):
            raise InvalidInstance("layer sizes and alphabets must be positive")
        seen = set()
        for e in edges:
            if not 0 <= e.i < e.j < self.ell:
                raise InvalidInstance(f"constraint layers ({e.i}, {e.j}) must satisfy 0 <= i < j < {self.ell}")
            if not (0 <= e.u < self.layer_sizes[e.i] and 0 <= e.v < self.layer_sizes[e.j]):
                raise InvalidInstance(f"constraint {e.i}:{e.u}->{e.j}:{e.v} references a missing variable")
            key = (e.i, e.u, e.j, e.v)
            if key in seen:
                raise InvalidInstance(f"duplicate constraint {e.i}:{e.u}->{e.j}:{e.v}")
            seen.add(key)
            if len(e.pi) != self.alphabets[e.i] or not all(1 <= r <= self.alphabets[e.j] for r in e.pi):
                raise InvalidInstance(f"map on {e.i}:{e.u}->{e.j}:{e.v} is not a function [R_i]->[R_j]")

    kind = "layered"

    @property
    def ell(self) -> int:
        return len(self.layer_sizes)

    def variables(self) -> list[Var]:
        return [(i, u) for i, size in enumerate(self.layer_sizes) for u in range(size)]

    def layer(self, i: int) -> list[Var]:
        return [(i, u) for u in range(self.layer_sizes[i])]

    def alphabet(self, var: Var) -> int:
        return self.alphabets[var[0]]

    @cached_property
    def pair_edges(self) -> dict[tuple[int, int], list[LayeredConstraint]]:
        out: dict[tuple[int, int], list] = {}
        for i, j in itertools.combinations(range(self.ell), 2):
            out[(i, j)] = []
        for e in self.edges:
            out[(e.i, e.j)].append(e)
        return out

    @cached_property
    def out_neighbors(self) -> dict[tuple[Var, int], list[tuple[int, tuple[int, ...]]]]:
        """((i, u), j) -> [(v, pi), ...]: constraints from x=(i,u) into layer j."""
        out: dict = defaultdict(list)
        for e in self.edges:
            out[((e.i, e.u), e.j)].append((e.v, e.pi))
        return dict(out)

    @cached_property
    def in_neighbors(self) -> dict[Var, list[tuple[Var, tuple[int, ...]]]]:
        """(j, v) -> [((i, u), pi), ...] over all earlier layers."""
        out: dict = defaultdict(list)
        for e in self.edges:
            out[(e.j, e.v)].append(((e.i, e.u), e.pi))
        return {y: sorted(lst) for y, lst in out.items()}


@dataclass(frozen=True)
class GenConfig:
    """Parameters for the planted generators.

    Bipartite: ``n_left``, ``n_right``, ``L``, ``R``, ``left_degree``.
    Layered: ``layer_sizes``, ``alphabets``, ``layer_degree`` (neighbors of each
    x in every later layer; ``None`` connects to the whole layer) and the
    smoothness target ``smoothness`` (T), which is certified for |S| <= 3.
    """

    n_left: int = 4
    n_right: int = 2
    L: int = 3
    R: int = 2
    left_degree: int = 1
    layer_sizes: tuple[int, ...] = ()
    alphabets: tuple[int, ...] = ()
    layer_degree: int | None = None
    smoothness: float | None = None
    seed: int = 0
    candidates: int = 16


def gen_planted_bipartite(cfg: GenConfig) -> tuple[BipartiteInstance, Assignment]:
    """Bi-regular instance with uniformly random maps patched to satisfy a planted labeling."""
    nl, nr, d = cfg.n_left, cfg.n_right, cfg.left_degree
    if min(nl, nr, cfg.L, cfg.R) < 1:
        raise InvalidConfig("sizes and alphabets must be positive")
    if not 1 <= d <= nr:
        raise InvalidConfig(f"left degree {d} must lie in 1..|V|={nr}")
    if (nl * d) % nr:
        raise InvalidConfig(f"|U|*degree = {nl * d} is not divisible by |V| = {nr}; no bi-regular graph")
    if cfg.R > cfg.L:
        warnings.warn(f"L={cfg.L} < R={cfg.R}: projection maps cannot be surjective", stacklevel=2)
    rng = np.random.default_rng(cfg.seed)
    left_perm = rng.permutation(nl)
    right_perm = rng.permutation(nr)
    labels_u = rng.integers(1, cfg.L + 1, size=nl)
    labels_v = rng.integers(1, cfg.R + 1, size=nr)
    pairs = []
    for slot in range(nl * d):
        u, v = int(left_perm[slot // d]), int(right_perm[slot % nr])
        pairs.append((u, v))
    edges = []
    for u, v in sorted(pairs):
        pi = rng.integers(1, cfg.R + 1, size=cfg.L)
        pi[labels_u[u] - 1] = labels_v[v]
        edges.append(Constraint(u, v, tuple(int(x) for x in pi)))
    inst = BipartiteInstance(nl, nr, cfg.L, cfg.R, tuple(edges))
    planted = {("u", u): int(labels_u[u]) for u in range(nl)}
    planted.update({("v", v): int(labels_v[v]) for v in range(nr)})
    return inst, planted


def _balanced_map(rng, r_src: int, r_dst: int, a_src: int, a_dst: int) -> np.ndarray:
    """Random map with fibers of near-equal size (injective if r_src <= r_dst), sending a_src to a_dst."""
    order = rng.permutation(r_src)
    relabel = rng.permutation(r_dst) + 1
    pi = np.empty(r_src, dtype=np.int64)
    pi[order] = relabel[np.arange(r_src) % r_dst]
    cur = pi[a_src - 1]
    if cur != a_dst:
        hit_cur, hit_dst = pi == cur, pi == a_dst
        pi[hit_cur], pi[hit_dst] = a_dst, cur
    return pi


def _collided_pairs(pi: np.ndarray) -> list[tuple[int, int]]:
    fibers: dict[int, list[int]] = defaultdict(list)
    for r, img in enumerate(pi.tolist()):
        fibers[img].append(r)
    return [p for members in fibers.values() for p in itertools.combinations(members, 2)]


def gen_planted_layered(cfg: GenConfig) -> tuple[LayeredInstance, Assignment]:
    """Layered instance satisfied by a planted labeling.

    Maps are balanced (as injective as the alphabets allow). For each source
    variable and target layer, every new map is the best of ``cfg.candidates``
    random balanced maps, scored by how often it collapses label pairs that
    earlier maps already collapsed. With ``cfg.smoothness`` set, the result is
    checked against T for all |S| <= 3 and rejected if it fails.
    """
    sizes, alphabets = tuple(cfg.layer_sizes), tuple(cfg.alphabets)
    ell = len(sizes)
    if ell < 2:
        raise InvalidConfig("a layered instance needs at least two layers")
    if len(alphabets) != ell:
        raise InvalidConfig("one alphabet per layer is required")
    if min(sizes) < 1 or min(alphabets) < 1:
        raise InvalidConfig("layer sizes and alphabets must be positive")
    if cfg.layer_degree is not None and cfg.layer_degree < 1:
        raise InvalidConfig("layer_degree must be positive")
    rng = np.random.default_rng(cfg.seed)
    planted = {}
    for i, size in enumerate(sizes):
        for u, lab in enumerate(rng.integers(1, alphabets[i] + 1, size=size).tolist()):
            planted[(i, u)] = lab
    n_cand = max(1, cfg.candidates) if cfg.smoothness is not None else 1
    edges = []
    for i, j in itertools.combinations(range(ell), 2):
        for u in range(sizes[i]):
            if cfg.layer_degree is None or cfg.layer_degree >= sizes[j]:
                targets = list(range(sizes[j]))
            else:
                targets = sorted(rng.choice(sizes[j], size=cfg.layer_degree, replace=False).tolist())
            counts: dict[tuple[int, int], int] = defaultdict(int)
            for v in targets:
                best, best_score = None, None
                for _ in range(n_cand):
                    pi = _balanced_map(rng, alphabets[i], alphabets[j], planted[(i, u)], planted[(j, v)])
                    hits = [counts[p] for p in _collided_pairs(pi)]
                    score = (max(hits, default=-1), sum(hits))
                    if best_score is None or score < best_score:
                        best, best_score = pi, score
                for p in _collided_pairs(best):
                    counts[p] += 1
                edges.append(LayeredConstraint(i, j, u, v, tuple(int(x) for x in best)))
    inst = LayeredInstance(sizes, alphabets, tuple(edges))
    if cfg.smoothness is not None:
        report = check_smoothness(inst, cfg.smoothness, s_max=3)
        if not report.passed:
            v = report.violations[0]
            raise InvalidConfig(
                f"smoothness T={cfg.smoothness} not attained for |S| <= 3: labels {list(v.labels)} "
                f"of {v.i}:{v.x} collapse into layer {v.j} with probability {v.prob:.3f}"
            )
    return inst, planted


@dataclass(frozen=True)
class SatisfactionReport:
    satisfied: int
    total: int
    fraction: float
    per_pair: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"satisfied": self.satisfied, "total": self.total, "fraction": self.fraction}
        if self.per_pair:
            out["per_pair"] = {f"{i}-{j}": v for (i, j), v in sorted(self.per_pair.items())}
        return out


def _check_labels(instance, A: Mapping[Var, int]) -> None:
    valid = set(instance.variables())
    for var, lab in A.items():
        if var not in valid:
            raise InvalidAssignment(f"unknown variable {var_key(var)}")
        if not 1 <= lab <= instance.alphabet(var):
            raise InvalidAssignment(f"label {lab} of {var_key(var)} outside 1..{instance.alphabet(var)}")


def eval_assignment(instance, A: Mapping[Var, int]) -> SatisfactionReport:
    """Fraction of constraints satisfied; unassigned endpoints count as unsatisfied.

    For layered instances ``per_pair`` maps each layer pair (i, j) to its own
    fraction. An empty constraint set scores 1.0.
    """
    _check_labels(instance, A)
    if isinstance(instance, BipartiteInstance):
        ok = sum(1 for e in instance.edges if _sat(A.get(("u", e.u)), A.get(("v", e.v)), e.pi))
        total = len(instance.edges)
        return SatisfactionReport(ok, total, ok / total if total else 1.0)
    per_pair = {}
    ok_all = 0
    for (i, j), edges in instance.pair_edges.items():
        ok = sum(1 for e in edges if _sat(A.get((e.i, e.u)), A.get((e.j, e.v)), e.pi))
        ok_all += ok
        per_pair[(i, j)] = ok / len(edges) if edges else 1.0
    total = len(instance.edges)
    return SatisfactionReport(ok_all, total, ok_all / total if total else 1.0, per_pair)


def _sat(a, b, pi) -> bool:
    return a is not None and b is not None and pi[a - 1] == b


def random_assignment(instance, rng) -> Assignment:
    return {var: int(rng.integers(1, instance.alphabet(var) + 1)) for var in instance.variables()}


def random_labeling_baseline(instance, trials: int = 1000, seed: int = 0) -> float:
    """Mean satisfied fraction of uniformly random labelings."""
    rng = np.random.default_rng(seed)
    return float(np.mean([eval_assignment(instance, random_assignment(instance, rng)).fraction for _ in range(trials)]))


def constraint_fraction(instance: BipartiteInstance, X: Iterable[int]) -> Fraction:
    """|Phi(X, V)| / |Phi| for a set of left indices X."""
    X = set(X)
    total = len(instance.edges)
    if not total:
        return Fraction(0)
    return Fraction(sum(1 for e in instance.edges if e.u in X), total)


# -- smoothness ---------------------------------------------------------------


class SmoothnessRow(NamedTuple):
    i: int
    j: int
    size: int
    max_prob: float
    bound: float
    mode: str


class SmoothnessViolation(NamedTuple):
    i: int
    j: int
    x: int
    labels: tuple[int, ...]
    prob: float


@dataclass(frozen=True)
class SmoothnessReport:
    T: float
    ell: int
    rows: tuple[SmoothnessRow, ...]
    violations: tuple[SmoothnessViolation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "T": self.T,
            "ell": self.ell,
            "passed": self.passed,
            "rows": [r._asdict() for r in self.rows],
            "violations": [dict(v._asdict(), labels=list(v.labels)) for v in self.violations],
        }


def _collapse_fraction(maps: np.ndarray, subsets: np.ndarray) -> np.ndarray:
    """For each subset (row of 1-based labels), the fraction of maps that collapse it."""
    imgs = maps[:, subsets - 1]  # (deg, M, s)
    s = subsets.shape[1]
    collapsed = np.zeros(imgs.shape[:2], dtype=bool)
    for a, b in itertools.combinations(range(s), 2):
        collapsed |= imgs[:, :, a] == imgs[:, :, b]
    return collapsed.mean(axis=0)


def check_smoothness(
    instance: LayeredInstance,
    T: float,
    s_max: int = 3,
    samples: int = 0,
    seed: int = 0,
) -> SmoothnessReport:
    """Worst collapse probability Pr_y[|pi_{x->y}(S)| < |S|] per layer pair and |S|.

    Sets with ``|S| <= s_max`` are enumerated. Larger sets are sampled
    (``samples`` random sets per source variable and size) when ``samples > 0``.
    Any (x, S) above ``|S|^2 * ell / T`` is recorded as a violation.
    """
    rng = np.random.default_rng(seed)
    ell = instance.ell
    rows, violations = [], []
    for (i, j) in instance.pair_edges:
        r_i = instance.alphabets[i]
        worst: dict[int, float] = {}
        modes: dict[int, str] = {}
        for u in range(instance.layer_sizes[i]):
            nbrs = instance.out_neighbors.get(((i, u), j), [])
            if not nbrs:
                continue
            maps = np.array([pi for _, pi in nbrs], dtype=np.int64)
            for s in range(2, r_i + 1):
                if s <= s_max:
                    subsets = np.array(list(itertools.combinations(range(1, r_i + 1), s)), dtype=np.int64)
                    modes[s] = "exhaustive"
                elif samples > 0:
                    subsets = np.sort(
                        np.array([rng.choice(r_i, size=s, replace=False) + 1 for _ in range(samples)]), axis=1
                    )
                    modes[s] = "sampled"
                else:
                    break
                probs = _collapse_fraction(maps, subsets)
                worst[s] = max(worst.get(s, 0.0), float(probs.max()))
                bound = s * s * ell / T
                for idx in np.nonzero(probs > bound)[0].tolist():
                    violations.append(
                        SmoothnessViolation(i, j, u, tuple(int(x) for x in subsets[idx]), float(probs[idx]))
                    )
        for s in sorted(worst):
            rows.append(SmoothnessRow(i, j, s, worst[s], s * s * ell / T, modes[s]))
    return SmoothnessReport(T, ell, tuple(rows), tuple(violations))


# -- weak density ---------------------------------------------------------------


@dataclass(frozen=True)
class WeakDensityReport:
    m: int
    min_ratio: float
    threshold: float
    mode: str  # "proven" | "sampled" | "vacuous"
    configurations: int
    worst: tuple = ()

    @property
    def passed(self) -> bool:
        return self.min_ratio >= self.threshold

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "min_ratio": self.min_ratio,
            "threshold": self.threshold,
            "passed": self.passed,
            "mode": self.mode,
            "configurations": self.configurations,
            "worst": [[layer, sorted(s)] for layer, s in self.worst],
        }


def _best_pair_ratio(instance: LayeredInstance, layers, sets) -> float:
    best = 0.0
    for a, b in itertools.combinations(range(len(layers)), 2):
        i, j = layers[a], layers[b]
        edges = instance.pair_edges[(i, j)]
        if not edges:
            return 1.0
        sa, sb = sets[a], sets[b]
        inside = sum(1 for e in edges if e.u in sa and e.v in sb)
        best = max(best, inside / len(edges))
    return best


def check_weak_density(
    instance: LayeredInstance,
    m: int,
    trials: int = 200,
    seed: int = 0,
    exhaustive_limit: int = 16,
) -> WeakDensityReport:
    """Minimum, over layer sequences and dense sets, of the best pairwise constraint ratio.

    Sets of the minimum allowed size ``ceil(2|U_i|/m)`` are enough: enlarging a
    set never lowers a ratio. Instances with at most ``exhaustive_limit``
    variables are enumerated (mode "proven"); larger ones are sampled.
    A layer pair with no constraints at all satisfies the condition trivially.
    """
    if not 1 <= m <= instance.ell:
        raise OutOfRange(f"m must lie in 1..{instance.ell}, got {m}")
    threshold = 1.0 / (m * m)
    if m == 1:
        return WeakDensityReport(m, 1.0, threshold, "vacuous", 0)
    need = [math.ceil(2 * s / m) for s in instance.layer_sizes]
    usable = [i for i in range(instance.ell) if need[i] <= instance.layer_sizes[i]]
    if len(usable) < m:
        return WeakDensityReport(m, 1.0, threshold, "vacuous", 0)
    worst_ratio, worst, count = math.inf, (), 0

    def consider(layers, sets):
        nonlocal worst_ratio, worst, count
        count += 1
        ratio = _best_pair_ratio(instance, layers, sets)
        if ratio < worst_ratio:
            worst_ratio, worst = ratio, tuple(zip(layers, (frozenset(s) for s in sets)))

    if sum(instance.layer_sizes) <= exhaustive_limit:
        mode = "proven"
        for layers in itertools.combinations(usable, m):
            choices = [list(itertools.combinations(range(instance.layer_sizes[i]), need[i])) for i in layers]
            for sets in itertools.product(*choices):
                consider(layers, [set(s) for s in sets])
    else:
        mode = "sampled"
        rng = np.random.default_rng(seed)
        for _ in range(trials):
            layers = sorted(rng.choice(usable, size=m, replace=False).tolist())
            sets = [set(rng.choice(instance.layer_sizes[i], size=need[i], replace=False).tolist()) for i in layers]
            consider(layers, sets)
    return WeakDensityReport(m, float(worst_ratio), threshold, mode, count, worst)


# -- serialization ----------------------------------------------------------------


def var_key(var: Var) -> str:
    return f"{var[0]}:{var[1]}"


def parse_var(key: str) -> Var:
    a, b = key.split(":")
    return (a, int(b)) if a in ("u", "v") else (int(a), int(b))


def instance_to_json(instance) -> dict:
    if isinstance(instance, BipartiteInstance):
        return {
            "type": "bipartite",
            "L": instance.L,
            "R": instance.R,
            "U": instance.n_left,
            "V": instance.n_right,
            "edges": [{"u": e.u, "v": e.v, "pi": list(e.pi)} for e in instance.edges],
        }
    return {
        "type": "layered",
        "layers": [{"size": s, "R": r} for s, r in zip(instance.layer_sizes, instance.alphabets)],
        "edges": [{"i": e.i, "j": e.j, "u": e.u, "v": e.v, "pi": list(e.pi)} for e in instance.edges],
    }


def instance_from_json(obj: dict):
    kind = obj.get("type")
    if kind == "bipartite":
        edges = tuple(Constraint(e["u"], e["v"], tuple(e["pi"])) for e in obj["edges"])
        return BipartiteInstance(obj["U"], obj["V"], obj["L"], obj["R"], edges)
    if kind == "layered":
        edges = tuple(LayeredConstraint(e["i"], e["j"], e["u"], e["v"], tuple(e["pi"])) for e in obj["edges"])
        layers = obj["layers"]
        return LayeredInstance(tuple(x["size"] for x in layers), tuple(x["R"] for x in layers), edges)
    raise InvalidInstance(f"unknown instance type {kind!r}")


def dumps_instance(instance) -> str:
    return json.dumps(instance_to_json(instance)) + "\n"


def loads_instance(text: str):
    return instance_from_json(json.loads(text))


def _var_order(var: Var):
    return (0, var[0], var[1]) if isinstance(var[0], str) else (1, str(var[0]).zfill(8), var[1])


def dumps_assignment(A: Mapping[Var, int]) -> str:
    labels = {var_key(v): int(A[v]) for v in sorted(A, key=_var_order)}
    return json.dumps({"labels": labels}) + "\n"


def loads_assignment(text: str) -> Assignment:
    obj = json.loads(text)
    return {parse_var(k): int(v) for k, v in obj["labels"].items()}


def read_instance(path: str | Path):
    return loads_instance(Path(path).read_text())


def write_instance(instance, path: str | Path) -> None:
    Path(path).write_text(dumps_instance(instance))
