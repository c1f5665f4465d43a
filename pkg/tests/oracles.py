"""Brute-force reference implementations used to check the library.

Nothing here imports library algorithms; only plain data types are shared.
"""

from __future__ import annotations

import itertools
import math

import numpy as np


def agree_coords(words):
    n = len(words[0])
    return {i + 1 for i in range(n) if len({w[i] for w in words}) == 1}


def is_agreeing(words, k, t):
    words = list(words)
    for size in range(2, k + 1):
        for combo in itertools.combinations(words, size):
            if len(agree_coords(combo)) < t:
                return False
    return True


def is_intersecting(words, k, t):
    """Binary words with symbols 1/2; a 'one' is symbol 2."""
    words = list(words)
    for size in range(2, k + 1):
        for combo in itertools.combinations(words, size):
            ones = [i for i in range(len(combo[0])) if all(w[i] == 2 for w in combo)]
            if len(ones) < t:
                return False
    return True


def _subset_masks(n_items: int) -> np.ndarray:
    return np.arange(1 << n_items, dtype=np.int64)


def max_agreeing_size(n, q, k, t):
    """Largest k-wise t-agreeing subfamily of [q]^n, by scanning all 2^(q^n) subfamilies."""
    cube = list(itertools.product(range(1, q + 1), repeat=n))
    bad = []
    for size in range(2, k + 1):
        for combo in itertools.combinations(range(len(cube)), size):
            if len(agree_coords([cube[i] for i in combo])) < t:
                bad.append(sum(1 << i for i in combo))
    S = _subset_masks(len(cube))
    ok = np.ones(len(S), dtype=bool)
    for b in bad:
        ok &= (S & b) != b
    sizes = np.array([bin(s).count("1") for s in range(len(S))])
    return int(sizes[ok].max())


def max_independent_size(n_vertices, edges):
    """Largest vertex set containing no edge, by scanning all 2^n subsets."""
    S = _subset_masks(n_vertices)
    ok = np.ones(len(S), dtype=bool)
    for e in edges:
        b = sum(1 << v for v in e)
        ok &= (S & b) != b
    sizes = np.array([bin(s).count("1") for s in range(len(S))])
    return int(sizes[ok].max())


def ft_naive(n, t):
    return 3 ** (n - 3 * t + 1) * sum(math.comb(3 * t - 1, i) * 2**i for i in range(t))


def two_k_edge(instance, k, side1, side2):
    """side = (left index u, list of k words); rule evaluated for every shared y."""
    (u1, w1), (u2, w2) = side1, side2
    if u1 == u2:
        return False
    maps1 = {e.v: e.pi for e in instance.edges if e.u == u1}
    maps2 = {e.v: e.pi for e in instance.edges if e.u == u2}
    for y in set(maps1) & set(maps2):
        p1, p2 = maps1[y], maps2[y]
        good = True
        for i1 in range(len(p1)):
            for i2 in range(len(p2)):
                if p1[i1] == p2[i2]:
                    vals = [a[i1] for a in w1] + [b[i2] for b in w2]
                    if len(set(vals)) == 1:
                        good = False
        if good:
            return True
    return False


def k_plus_one_edge(pi, words, b):
    for r in range(len(pi)):
        vals = [a[r] for a in words] + [b[pi[r] - 1]]
        if len(set(vals)) == 1:
            return False
    return True


def random_hypergraph(rng, n, m, sizes=(2, 3, 4)):
    if m > sum(math.comb(n, s) for s in sizes if s <= n):
        raise ValueError(f"cannot draw {m} distinct edges on {n} vertices")
    edges = set()
    while len(edges) < m:
        size = int(rng.choice(sizes))
        if size > n:
            continue
        edges.add(tuple(sorted(int(v) for v in rng.choice(n, size=size, replace=False))))
    return sorted(edges)
