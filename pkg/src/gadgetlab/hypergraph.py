"""Explicit hypergraphs, colorings, and their text/JSON file formats.

Vertices are 0-based indices in memory and 1-based in every file.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple, Sequence

import numpy as np


class GadgetVertex(NamedTuple):
    """Vertex ``(x, a)`` of a gadget: a Label Cover variable and a word in its cloud."""

    var: tuple
    word: tuple[int, ...]


@dataclass(frozen=True)
class ExplicitHypergraph:
    n_vertices: int
    edges: tuple[tuple[int, ...], ...]
    uniformity: int = 0  # 0 means "not uniform"
    vertices: tuple[GadgetVertex, ...] | None = None

    def __post_init__(self):
        edges = tuple(tuple(sorted(int(v) for v in e)) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        for e in edges:
            if not e:
                raise ValueError("empty edges are not allowed")
            if len(set(e)) != len(e):
                raise ValueError(f"edge {e} repeats a vertex")
            if not (0 <= e[0] and e[-1] < self.n_vertices):
                raise ValueError(f"edge {e} references a vertex outside 0..{self.n_vertices - 1}")
            if self.uniformity and len(e) != self.uniformity:
                raise ValueError(f"edge {e} has size {len(e)}, expected {self.uniformity}")
        if self.vertices is not None and len(self.vertices) != self.n_vertices:
            raise ValueError("vertex table length does not match n_vertices")

    def incidence(self) -> list[list[int]]:
        """Edge ids containing each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for eid, e in enumerate(self.edges):
            for v in e:
                inc[v].append(eid)
        return inc

    def edge_masks(self) -> list[int]:
        return [sum(1 << v for v in e) for e in self.edges]


@dataclass(frozen=True)
class Coloring:
    """Color (1..num_colors) of every vertex, indexed by canonical vertex index."""

    colors: tuple[int, ...]
    num_colors: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        bad = [c for c in self.colors if not 1 <= c <= self.num_colors]
        if bad:
            raise ValueError(f"colors {sorted(set(bad))} outside 1..{self.num_colors}")

    def __call__(self, vertex: int) -> int:
        return self.colors[vertex]

    def __len__(self) -> int:
        return len(self.colors)

    def array(self) -> np.ndarray:
        return np.asarray(self.colors, dtype=np.int64)

    def color_class(self, c: int) -> frozenset[int]:
        return frozenset(i for i, col in enumerate(self.colors) if col == c)


def count_monochromatic(h: ExplicitHypergraph, coloring: Coloring) -> tuple[int, tuple[int, ...] | None]:
    col = coloring.colors
    count, witness = 0, None
    for e in h.edges:
        if all(col[v] == col[e[0]] for v in e):
            count += 1
            if witness is None:
                witness = e
    return count, witness


# -- files ---------------------------------------------------------------------


def dumps_hgr(h: ExplicitHypergraph) -> str:
    lines = [f"p hgr {h.n_vertices} {len(h.edges)} {h.uniformity}"]
    lines.extend(" ".join(str(v + 1) for v in e) for e in h.edges)
    return "\n".join(lines) + "\n"


def loads_hgr(text: str, vertices: Sequence[GadgetVertex] | None = None) -> ExplicitHypergraph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 5 or parts[1] != "hgr":
                raise ValueError(f"line {lineno}: expected 'p hgr <n> <m> <u>'")
            header = tuple(int(x) for x in parts[2:])
            continue
        if header is None:
            raise ValueError(f"line {lineno}: edge before 'p hgr' header")
        edges.append(tuple(int(x) - 1 for x in line.split()))
    if header is None:
        raise ValueError("missing 'p hgr' header")
    n, m, u = header
    if len(edges) != m:
        raise ValueError(f"header announces {m} edges, found {len(edges)}")
    return ExplicitHypergraph(n, tuple(edges), u, tuple(vertices) if vertices is not None else None)


def _var_key(var) -> str:
    return f"{var[0]}:{var[1]}"


def _parse_var(key: str):
    a, b = key.split(":")
    return (a, int(b)) if a in ("u", "v") else (int(a), int(b))


def dumps_vertex_map(vertices: Sequence[GadgetVertex]) -> str:
    rows = [{"index": i + 1, "var": _var_key(v.var), "word": list(v.word)} for i, v in enumerate(vertices)]
    return json.dumps({"vertices": rows}) + "\n"


def loads_vertex_map(text: str) -> tuple[GadgetVertex, ...]:
    rows = json.loads(text)["vertices"]
    out = []
    for pos, row in enumerate(rows, 1):
        if row["index"] != pos:
            raise ValueError(f"vertex map rows must be ordered by index; row {pos} has index {row['index']}")
        out.append(GadgetVertex(_parse_var(row["var"]), tuple(row["word"])))
    return tuple(out)


def write_hypergraph(h: ExplicitHypergraph, path: str | Path, vertex_map: str | Path | None = None) -> None:
    Path(path).write_text(dumps_hgr(h))
    if vertex_map is not None and h.vertices is not None:
        Path(vertex_map).write_text(dumps_vertex_map(h.vertices))


def read_hypergraph(path: str | Path, vertex_map: str | Path | None = None) -> ExplicitHypergraph:
    vertices = loads_vertex_map(Path(vertex_map).read_text()) if vertex_map is not None else None
    return loads_hgr(Path(path).read_text(), vertices)


def dumps_coloring(coloring: Coloring) -> str:
    return json.dumps({"num_colors": coloring.num_colors, "colors": list(coloring.colors)}) + "\n"


def loads_coloring(text: str) -> Coloring:
    obj = json.loads(text)
    return Coloring(tuple(obj["colors"]), obj["num_colors"])


def dumps_vertex_set(vertices) -> str:
    return json.dumps({"vertices": [v + 1 for v in sorted(vertices)]}) + "\n"


def loads_vertex_set(text: str) -> frozenset[int]:
    return frozenset(v - 1 for v in json.loads(text)["vertices"])
