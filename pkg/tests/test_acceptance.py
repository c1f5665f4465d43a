"""Acceptance suite: one test function per criterion (parametrized where a
criterion covers several configurations). A summary line per criterion is
printed at the end of the run."""

import itertools
import json
import math
import os
import subprocess
import sys
import time

import numpy as np
import pytest

import oracles
from conftest import planted_bipartite, planted_layered
from gadgetlab.decode import (
    DecodeParams,
    check_disjoint_density,
    cloud_label_lists,
    cross_intersection,
    decode_bipartite,
    decode_layered,
    max_disjoint_subfamily,
    star_pick,
)
from gadgetlab.errors import NotIndependent
from gadgetlab.families import (
    Family,
    bound_report,
    dumps_family,
    ft_ternary_bound,
    golden_ratio_bound,
    is_k_wise_t_agreeing,
    is_k_wise_t_intersecting,
    is_upward_closed,
    loads_family,
    max_agreeing_family,
    monotonize,
)
from gadgetlab.hypergraph import (
    ExplicitHypergraph,
    dumps_coloring,
    dumps_hgr,
    dumps_vertex_map,
    dumps_vertex_set,
    loads_coloring,
    loads_hgr,
    loads_vertex_map,
    loads_vertex_set,
)
from gadgetlab.labelcover import (
    dumps_assignment,
    dumps_instance,
    loads_assignment,
    loads_instance,
    random_labeling_baseline,
)
from gadgetlab.reduction import build_2k_gadget, build_k1_gadget, completeness_coloring, is_edge, materialize, verify_coloring
from gadgetlab.solvers import exists_proper_coloring, is_independent, max_independent_set


# -- 1. golden-ratio bound -------------------------------------------------------------------


def test_c01_golden_ratio_bound():
    start = time.perf_counter()
    found = {}
    for n in (3, 4):
        for t in range(1, n + 1):
            brute = oracles.max_agreeing_size(n, 2, 3, t)
            searched = max_agreeing_family(n, 2, 3, t, method="exact")
            assert searched.exhaustive and searched.max_size == brute
            assert brute <= math.floor(golden_ratio_bound(n, t))
            found[n, t] = brute
    assert found[3, 1] == 4
    assert found[4, 1] <= 9
    assert time.perf_counter() - start < 120


# -- 2. shifting ---------------------------------------------------------------------------------


def _bits(family: Family) -> np.ndarray:
    # word -> integer with bit i set when coordinate i+1 holds symbol 2
    return np.array([sum(1 << i for i, s in enumerate(w.symbols) if s == 2) for w in family.sorted()], dtype=np.int64)


def _largest_agreement(family: Family) -> int:
    """Largest t with the family 3-wise t-agreeing, from triple (or pair) agreement counts."""
    b = _bits(family)
    n, m = family.n, len(b)
    full = (1 << n) - 1
    if m < 2:
        return n
    if m == 2:
        return n - int(b[0] ^ b[1]).bit_count()
    i, j, l = np.array(list(itertools.combinations(range(m), 3))).T
    same = full & ~(b[i] ^ b[j]) & ~(b[i] ^ b[l])
    return int(min(int(x).bit_count() for x in np.unique(same)))


def _random_family(rng) -> Family:
    n = int(rng.integers(2, 11))
    size = int(rng.integers(1, min(64, 2**n) + 1))
    fixed = rng.random(n) < rng.random()  # share a random set of coordinates
    base = rng.integers(1, 3, n)
    words = set()
    while len(words) < size:
        w = np.where(fixed, base, rng.integers(1, 3, n))
        words.add(tuple(int(x) for x in w))
        if len(words) < size and 2 ** int((~fixed).sum()) <= len(words):
            break
    return Family.from_digits(["".join(str(s - 1) for s in w) for w in words], 2)


def test_c02_shifting_suite():
    rng = np.random.default_rng(2024)
    start = time.perf_counter()
    agreeing_inputs = 0
    for _ in range(1000):
        fam = _random_family(rng)
        t = _largest_agreement(fam)
        out = monotonize(fam)
        assert len(out) == len(fam)
        assert is_upward_closed(out)
        assert is_k_wise_t_agreeing(out, 3, t)
        if t > 0:
            agreeing_inputs += 1
        if is_k_wise_t_agreeing(out, 3, t):
            assert is_k_wise_t_intersecting(out, 3, t)
    assert agreeing_inputs >= 300
    assert time.perf_counter() - start < 60


# -- 3. ternary formula ----------------------------------------------------------------------------


def test_c03_ternary_formula_and_report():
    assert ft_ternary_bound(7, 2) == 99
    for t in range(1, 51):
        assert ft_ternary_bound(3 * t - 1, t) == oracles.ft_naive(3 * t - 1, t)
    rep = bound_report(2, 3, 2, 1)
    assert rep["oracle"] == 3 == oracles.max_agreeing_size(2, 3, 2, 1)
    assert rep["bounds"]["ft_ternary"]["value"] == 1
    assert rep["discrepancy"] is True


# -- 4. completeness ---------------------------------------------------------------------------------

_TWO_K = [(q, k, L) for q in (2, 3) for k in (2, 3) for L in (2, 3, 4)]
_K_PLUS_ONE = [(q, k, seed) for q in (2, 3) for k in (2, 3) for seed in (0, 1)]


@pytest.mark.parametrize("q,k,L", _TWO_K)
def test_c04_completeness_two_k(q, k, L):
    inst, A = planted_bipartite(n_left=4, n_right=2, L=L, R=2, left_degree=2, seed=10 * q + k + L)
    g = build_2k_gadget(inst, q, k)
    rep = verify_coloring(g, completeness_coloring(g, A), mode="exhaustive", cap=10**9)
    assert rep.exhaustive and rep.monochromatic == 0


@pytest.mark.parametrize("q,k,seed", _K_PLUS_ONE)
def test_c04_completeness_k_plus_one(q, k, seed):
    inst, A = planted_layered(layer_sizes=(2, 2, 2), alphabets=(4, 3, 2), seed=seed)
    g = build_k1_gadget(inst, q, k)
    rep = verify_coloring(g, completeness_coloring(g, A), mode="exhaustive", cap=10**9)
    assert rep.exhaustive and rep.monochromatic == 0


def test_c04_configuration_count():
    assert len(_TWO_K) + len(_K_PLUS_ONE) >= 20


# -- 5. cross-intersection and mutations -------------------------------------------------------


def _random_edge(g, rng):
    while True:
        block = g.blocks[int(rng.integers(len(g.blocks)))]
        side_a = rng.choice(list(g.cloud_range(block.a)), size=block.ka, replace=False)
        side_b = rng.choice(list(g.cloud_range(block.b)), size=block.kb, replace=False)
        vs = sorted(int(v) for v in [*side_a, *side_b])
        if is_edge(g, [g.vertex(v) for v in vs]):
            return vs


_CROSS_TOYS = [(q, seed) for q in (2, 3) for seed in range(3)]


@pytest.mark.parametrize("q,seed", _CROSS_TOYS)
def test_c05_cross_intersection_and_mutations(q, seed):
    inst, A = planted_bipartite(n_left=4, n_right=2, L=3, R=2, left_degree=2, seed=seed)
    g = build_2k_gadget(inst, q, 2)
    col = completeness_coloring(g, A)
    params = DecodeParams(delta=1 / (2 * q), k=2, t=2, verify="exhaustive")
    rng = np.random.default_rng(seed)
    classes = [col.color_class(c) for c in range(1, q + 1)]
    for I in classes:
        assert cross_intersection(g, cloud_label_lists(g, I, params)) == []
        assert decode_bipartite(g, I, params).violations == ()
    trials = math.ceil(100 / len(_CROSS_TOYS))
    for trial in range(trials):
        I = set(classes[trial % q])
        added = _random_edge(g, rng)
        I.update(added)
        with pytest.raises(NotIndependent) as err:
            decode_bipartite(g, I, params)
        witness = err.value.witness
        assert set(witness) <= I
        assert is_edge(g, [g.vertex(v) for v in witness])


# -- 6. decoder yield -------------------------------------------------------------------------------


@pytest.mark.parametrize("q", [2, 3])
def test_c06_decoder_yield(q):
    fractions, baselines = [], []
    for seed in range(20):
        inst, A = planted_bipartite(n_left=6, n_right=4, L=4, R=6, left_degree=2, seed=seed)
        g = build_2k_gadget(inst, q, 2)
        I = completeness_coloring(g, A).color_class(1 + seed % q)
        rep = decode_bipartite(g, I, DecodeParams(delta=1 / (2 * q), k=2, t=2, seed=seed, verify="sampled"))
        fractions.append(rep.mean_fraction)
        baselines.append(random_labeling_baseline(inst, trials=500, seed=seed))
    mean, base = float(np.mean(fractions)), float(np.mean(baselines))
    assert mean >= 0.25
    assert mean >= 5 * base


def test_c06_layered_yield():
    fractions = []
    for seed in range(20):
        inst, A = planted_layered(layer_sizes=(3, 3, 3), alphabets=(4, 3, 2), seed=seed)
        g = build_k1_gadget(inst, 2, 3)
        I = completeness_coloring(g, A).color_class(1 + seed % 2)
        rep = decode_layered(g, I, DecodeParams(delta=1 / 4, k=3, t=2, seed=seed, verify="exhaustive"), m=3, T=16)
        fractions.append(rep.mean_fraction)
    assert float(np.mean(fractions)) >= 0.25


# -- 7. star pick -----------------------------------------------------------------------------------


def test_c07_star_pick_bound():
    rng = np.random.default_rng(7)
    checked = 0
    while checked < 10_000:
        t = int(rng.integers(1, 4))
        d = int(rng.integers(2, 5))
        n = int(rng.integers(t, 11))
        size = int(rng.integers(1, 13))
        fam = [frozenset(int(x) for x in rng.choice(n, size=int(rng.integers(1, t + 1)), replace=False) + 1) for _ in range(size)]
        if len(max_disjoint_subfamily(fam)) >= d:
            continue
        el, count = star_pick(fam, d, t)
        assert count == sum(1 for s in fam if el in s)
        assert count * t * (d - 1) >= len(fam)
        checked += 1


def test_c07_star_pick_extremal_cases():
    # three pairwise intersecting 2-sets: no element is in all three
    assert star_pick([{1, 2}, {1, 3}, {2, 3}], d=2, t=2) == (1, 2)
    # equality in the counting bound
    assert star_pick([{5}, {5}, {5}], d=2, t=1) == (5, 3)
    el, count = star_pick([{1}, {1}, {2}, {2}], d=3, t=1)
    assert count * 1 * 2 == 4


# -- 8. disjoint-list density --------------------------------------------------------------------

_DENSITY_TOYS = [
    ((2, 2), (3, 2), 2, 2),
    ((2, 2, 2), (3, 2, 1), 2, 2),
    ((2, 2), (2, 2), 3, 2),
    ((1, 2), (4, 2), 2, 3),
    ((2, 2, 2), (4, 3, 2), 2, 2),
]


@pytest.mark.parametrize("sizes,alphabets,q,k", _DENSITY_TOYS)
def test_c08_disjoint_density(sizes, alphabets, q, k):
    inst, A = planted_layered(layer_sizes=sizes, alphabets=alphabets, seed=1)
    g = build_k1_gadget(inst, q, k)
    assert max(g.cloud_size(x) for x in g.clouds) <= 16
    h = materialize(g)
    best = max_independent_set(h)
    assert best.exact
    col = completeness_coloring(g, A)
    sets = [best.vertices]
    for c in range(1, q + 1):
        sets.append(col.color_class(c))
        sets.append(max_independent_set(h, method="greedy", initial=col.color_class(c)).vertices)
    rows = 0
    for I in sets:
        assert is_independent(h, I).independent
        for t in (1, 2, 3):
            lists = cloud_label_lists(g, I, DecodeParams(delta=1e-9, k=k, t=t))
            checks = check_disjoint_density(g, I, lists, t)
            assert all(r.holds for r in checks), [r for r in checks if not r.holds]
            rows += len(checks)
    assert rows > 0


# -- 9. solvers ----------------------------------------------------------------------------------------


def test_c09_exact_mis_matches_brute_force():
    rng = np.random.default_rng(99)
    for _ in range(100):
        n = int(rng.integers(5, 17))
        edges = oracles.random_hypergraph(rng, n, int(rng.integers(1, 3 * n)))
        h = ExplicitHypergraph(n, tuple(edges))
        res = max_independent_set(h)
        assert res.size == oracles.max_independent_size(n, edges)
        assert is_independent(h, res.vertices).independent


def test_c09_l1_toy(l1_toy):
    assert max_independent_set(materialize(l1_toy)).size == 4


def test_c09_colorings_are_proper(l1_toy):
    rng = np.random.default_rng(5)
    graphs = [materialize(l1_toy)]
    for _ in range(30):
        n = int(rng.integers(4, 13))
        graphs.append(ExplicitHypergraph(n, tuple(oracles.random_hypergraph(rng, n, 2 * n))))
    found = 0
    for h in graphs:
        for c in (2, 3, 4):
            res = exists_proper_coloring(h, c)
            if res.coloring is not None:
                found += 1
                assert verify_coloring(h, res.coloring).monochromatic == 0
    assert found > 0


# -- 10. determinism and round trips ----------------------------------------------------------

_CLI_RUNS = [
    ["bounds", "ft", "--n", "7", "--t", "2"],
    ["family", "search", "--q", "2", "--n", "3", "--k", "3", "--t", "1", "--method", "exact"],
    ["pipeline", "completeness", "--q", "3", "--k", "2", "--L", "3", "--seed", "7"],
    ["pipeline", "soundness", "--q", "2", "--k", "2", "--L", "3", "--R", "2", "--seed", "3", "--baseline-trials", "50"],
    ["lc", "gen", "--kind", "layered", "--layer-sizes", "3,3,3", "--alphabets", "4,3,2", "--seed", "5"],
]


def _cli(args, threads=None):
    env = dict(os.environ)
    env.pop("GADGETLAB_THREADS", None)
    if threads is not None:
        env["GADGETLAB_THREADS"] = str(threads)
    return subprocess.run([sys.executable, "-m", "gadgetlab.cli", *args], capture_output=True, env=env, check=False)


@pytest.mark.parametrize("args", _CLI_RUNS, ids=lambda a: "-".join(a[:2]))
def test_c10_cli_is_byte_identical(args):
    outputs = [_cli(args, threads) for threads in (None, None, 1, 4)]
    assert outputs[0].returncode == 0, outputs[0].stderr
    assert all(o.stdout == outputs[0].stdout for o in outputs)
    assert all(o.returncode == 0 for o in outputs)
    json.loads(outputs[0].stdout)


def _corpus():
    for seed in range(4):
        inst, A = planted_bipartite(n_left=4, n_right=2, L=2, R=2, left_degree=1, seed=seed)
        yield inst, A, build_2k_gadget(inst, 2 + seed % 2, 2)
        inst, A = planted_layered(layer_sizes=(2, 2), alphabets=(3, 2), seed=seed)
        yield inst, A, build_k1_gadget(inst, 2, 2)


def test_c10_file_formats_round_trip():
    for inst, A, g in _corpus():
        text = dumps_instance(inst)
        assert loads_instance(text) == inst and dumps_instance(loads_instance(text)) == text
        atext = dumps_assignment(A)
        assert loads_assignment(atext) == A and dumps_assignment(loads_assignment(atext)) == atext

        h = materialize(g)
        htext, vtext = dumps_hgr(h), dumps_vertex_map(h.vertices)
        again = loads_hgr(htext, loads_vertex_map(vtext))
        assert again == h
        assert dumps_hgr(again) == htext and dumps_vertex_map(again.vertices) == vtext

        col = completeness_coloring(g, A)
        ctext = dumps_coloring(col)
        assert loads_coloring(ctext) == col and dumps_coloring(loads_coloring(ctext)) == ctext
        S = col.color_class(1)
        stext = dumps_vertex_set(S)
        assert loads_vertex_set(stext) == S and dumps_vertex_set(loads_vertex_set(stext)) == stext

    rng = np.random.default_rng(0)
    for _ in range(50):
        q, n = int(rng.integers(2, 5)), int(rng.integers(1, 6))
        words = {"".join(str(int(x)) for x in rng.integers(0, q, n)) for _ in range(int(rng.integers(1, 12)))}
        fam = Family.from_digits(words, q)
        text = dumps_family(fam)
        assert loads_family(text) == fam and dumps_family(loads_family(text)) == text
