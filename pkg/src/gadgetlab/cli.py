"""Command-line interface: ``gadgetlab <group> <command> [options]``.

Every command writes one JSON report to stdout (``--tsv`` flattens it) unless
it produces a file in one of the library formats. Exit codes: 0 success,
1 a verification or decoding check failed, 2 usage error, 3 a search or
enumeration exceeded its caps. Errors are reported as JSON on stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Callable

from . import decode as dec
from . import families as fam
from . import hypergraph as hg
from . import labelcover as lc
from . import reduction as red
from . import solvers
from .errors import (
    GadgetLabError,
    HypothesisViolated,
    Infeasible,
    NoHeavyClouds,
    NoLayerPair,
    NotIndependent,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INFEASIBLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# -- io helpers ---------------------------------------------------------------------


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _flatten_tsv(report: dict) -> str:
    rows = report.get("rows")
    if isinstance(rows, list) and rows and all(isinstance(r, dict) for r in rows):
        cols = sorted({c for r in rows for c in r})
        lines = ["\t".join(cols)]
        for r in rows:
            lines.append("\t".join(_cell(r.get(c)) for c in cols))
        return "\n".join(lines) + "\n"
    return "".join(f"{key}\t{_cell(report[key])}\n" for key in sorted(report))


def _cell(v) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True)
    if v is None:
        return ""
    return json.dumps(v) if isinstance(v, bool) else str(v)


def _emit(args, report: dict) -> None:
    text = _flatten_tsv(report) if getattr(args, "tsv", False) else json.dumps(report, sort_keys=True) + "\n"
    _write(getattr(args, "report", "-") or "-", text)


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x.strip())


def _int_range(text: str) -> list[int]:
    """``7``, ``3,5,9`` or ``2:6`` (inclusive)."""
    try:
        if ":" in text:
            lo, hi = text.split(":")
            return list(range(int(lo), int(hi) + 1))
        return list(_ints(text))
    except ValueError:
        raise UsageError(f"expected an integer, a list or a lo:hi range, got {text!r}") from None


def _workers() -> int:
    raw = os.environ.get("GADGETLAB_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"GADGETLAB_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise UsageError(f"GADGETLAB_THREADS must be a positive integer, got {raw!r}")
    return n


# -- lc -------------------------------------------------------------------------------


def cmd_lc_gen(args) -> int:
    cfg = lc.GenConfig(
        n_left=args.n_left,
        n_right=args.n_right,
        L=args.L,
        R=args.R,
        left_degree=args.left_degree,
        layer_sizes=_ints(args.layer_sizes) if args.layer_sizes else (),
        alphabets=_ints(args.alphabets) if args.alphabets else (),
        layer_degree=args.layer_degree,
        smoothness=args.smoothness,
        seed=args.seed,
    )
    if args.kind == "bipartite":
        inst, A = lc.gen_planted_bipartite(cfg)
    else:
        inst, A = lc.gen_planted_layered(cfg)
    _write(args.out, lc.dumps_instance(inst))
    if args.assignment_out:
        _write(args.assignment_out, lc.dumps_assignment(A))
    return EXIT_OK


def _layered(path: str) -> lc.LayeredInstance:
    inst = lc.loads_instance(_read(path))
    if not isinstance(inst, lc.LayeredInstance):
        raise UsageError("this command needs a layered instance")
    return inst


def cmd_lc_check_smooth(args) -> int:
    rep = lc.check_smoothness(_layered(args.instance), args.T, s_max=args.s_max, samples=args.samples, seed=args.seed)
    _emit(args, rep.to_json())
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_lc_check_dense(args) -> int:
    rep = lc.check_weak_density(_layered(args.instance), args.m, trials=args.trials, seed=args.seed)
    _emit(args, rep.to_json())
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_lc_eval(args) -> int:
    inst = lc.loads_instance(_read(args.instance))
    A = lc.loads_assignment(_read(args.assignment))
    _emit(args, lc.eval_assignment(inst, A).to_json())
    return EXIT_OK


# -- family ---------------------------------------------------------------------------


def cmd_family_agreement(args) -> int:
    words = [fam.Word.from_digits(w, args.q) for w in args.words]
    agree = fam.agreement(*words)
    _emit(args, {"agreement": sorted(agree), "size": len(agree)})
    return EXIT_OK


def cmd_family_check(args) -> int:
    F = fam.loads_family(_read(args.family))
    report = {"k": args.k, "t": args.t, "property": args.property, "members": len(F)}
    if args.property == "intersecting":
        holds = fam.is_k_wise_t_intersecting(F, args.k, args.t)
    else:
        holds = fam.is_k_wise_t_agreeing(F, args.k, args.t)
        if not holds:
            # agreement only shrinks as members are added, so the largest subsets are the tightest
            size = min(args.k, len(F))
            found = fam.find_low_agreement_tuple(F, size, args.t - 1)
            if found is not None:
                report["witness"] = [w.digits() for w in found.words]
                report["witness_agreement"] = sorted(found.agreement)
    report["holds"] = holds
    _emit(args, report)
    return EXIT_OK if holds else EXIT_FAIL


def cmd_family_shift(args) -> int:
    F = fam.loads_family(_read(args.family))
    _write(args.out, fam.dumps_family(fam.shift_coordinate(F, args.i)))
    return EXIT_OK


def cmd_family_monotonize(args) -> int:
    F = fam.loads_family(_read(args.family))
    _write(args.out, fam.dumps_family(fam.monotonize(F)))
    return EXIT_OK


def cmd_family_search(args) -> int:
    if args.compare:
        _emit(args, fam.bound_report(args.n, args.q, args.k, args.t, method=args.method))
        return EXIT_OK
    out = fam.max_agreeing_family(
        args.n, args.q, args.k, args.t, method=args.method, seed=args.seed,
        node_limit=args.node_limit, restarts=args.restarts,
    )
    _emit(args, {
        "max_size": out.max_size,
        "exhaustive": out.exhaustive,
        "nodes": out.nodes_explored,
        "witness": out.witness.digits(),
    })
    return EXIT_OK


# -- bounds ---------------------------------------------------------------------------


def _bound_cmd(fn: Callable[[int, int], float]) -> Callable:
    def run(args) -> int:
        rows = []
        for n in _int_range(args.n):
            for t in _int_range(args.t):
                rows.append({"n": n, "t": t, "bound": fn(n, t)})
        _emit(args, rows[0] if len(rows) == 1 else {"rows": rows})
        return EXIT_OK

    return run


# -- reduce / verify / solve --------------------------------------------------------------


def _gadget(args) -> red.GadgetHypergraph:
    inst = lc.loads_instance(_read(args.instance))
    kind = getattr(args, "kind", None) or ("two-k" if isinstance(inst, lc.BipartiteInstance) else "k-plus-one")
    if kind == "two-k":
        if not isinstance(inst, lc.BipartiteInstance):
            raise UsageError("the two-k gadget needs a bipartite instance")
        return red.build_2k_gadget(inst, args.q, args.k)
    if not isinstance(inst, lc.LayeredInstance):
        raise UsageError("the k-plus-one gadget needs a layered instance")
    return red.build_k1_gadget(inst, args.q, args.k)


def cmd_reduce(kind: str) -> Callable:
    def run(args) -> int:
        args.kind = kind
        _emit(args, red.gadget_summary(_gadget(args)))
        return EXIT_OK

    return run


def cmd_reduce_materialize(args) -> int:
    g = _gadget(args)
    h = red.materialize(g, max_vertices=args.max_vertices, max_edges=args.max_edges, cap=args.cap)
    _write(args.out, hg.dumps_hgr(h))
    if args.vertex_map:
        _write(args.vertex_map, hg.dumps_vertex_map(h.vertices))
    if args.out != "-":
        _emit(args, {"vertices": h.n_vertices, "edges": len(h.edges), "uniformity": h.uniformity})
    return EXIT_OK


def _target(args):
    if args.hgr:
        return hg.loads_hgr(_read(args.hgr))
    if not args.instance:
        raise UsageError("give either --hgr or --instance with --q and --k")
    return _gadget(args)


def cmd_verify_coloring(args) -> int:
    h = _target(args)
    if args.coloring:
        coloring = hg.loads_coloring(_read(args.coloring))
    elif args.assignment and isinstance(h, red.GadgetHypergraph):
        coloring = red.completeness_coloring(h, lc.loads_assignment(_read(args.assignment)))
    else:
        raise UsageError("give --coloring, or --assignment together with a gadget")
    rep = red.verify_coloring(h, coloring, mode=args.mode, samples=args.samples, seed=args.seed, cap=args.cap)
    _emit(args, rep.to_json())
    return EXIT_OK if rep.monochromatic == 0 else EXIT_FAIL


def cmd_verify_independent(args) -> int:
    h = _target(args)
    S = hg.loads_vertex_set(_read(args.set))
    rep = solvers.is_independent(h, S, mode=args.mode, samples=args.samples, seed=args.seed, cap=args.cap)
    _emit(args, rep.to_json())
    return EXIT_OK if rep.independent else EXIT_FAIL


def cmd_solve_mis(args) -> int:
    h = hg.loads_hgr(_read(args.hgr))
    initial = hg.loads_vertex_set(_read(args.initial)) if args.initial else None
    res = solvers.max_independent_set(
        h, method=args.method, seed=args.seed, iters=args.iters, node_limit=args.node_limit, initial=initial
    )
    _emit(args, res.to_json())
    return EXIT_OK


def cmd_solve_color(args) -> int:
    h = hg.loads_hgr(_read(args.hgr))
    res = solvers.exists_proper_coloring(h, args.colors, node_limit=args.node_limit)
    if res.coloring is not None and args.out:
        _write(args.out, hg.dumps_coloring(res.coloring))
    _emit(args, res.to_json())
    return EXIT_OK


# -- decode ---------------------------------------------------------------------------


def asymptotic_schedule(delta: float, c: float) -> dict:
    """t = ceil(c ln(1/delta)), ell = ceil(2/delta^2), T = ceil(16 t^2 ell / delta^2)."""
    if not 0 < delta < 1:
        raise UsageError("--paper-schedule needs 0 < delta < 1")
    t = max(1, math.ceil(c * math.log(1 / delta)))
    ell = math.ceil(2 / delta**2)
    T = math.ceil(16 * t * t * ell / delta**2)
    return {"t": t, "ell": ell, "T": T, "c": c}


def _decode_params(args, q: int) -> tuple[dec.DecodeParams, dict | None]:
    delta = args.delta if args.delta is not None else 1 / (2 * q)
    schedule = asymptotic_schedule(delta, args.c) if args.paper_schedule else None
    t = schedule["t"] if schedule else args.t
    params = dec.DecodeParams(
        delta=delta, k=args.k, t=t, budget=args.budget, seed=args.seed, trials=args.trials,
        verify=args.verify, probes=args.probes, layer_delta=getattr(args, "layer_delta", None),
    )
    return params, schedule


def cmd_decode(kind: str) -> Callable:
    def run(args) -> int:
        args.kind = kind
        g = _gadget(args)
        I = hg.loads_vertex_set(_read(args.set))
        params, schedule = _decode_params(args, g.q)
        if kind == "two-k":
            rep = dec.decode_bipartite(g, I, params)
        else:
            m = args.m if args.m is not None else (schedule["ell"] if schedule else None)
            T = args.T if args.T is not None else (schedule["T"] if schedule else None)
            rep = dec.decode_layered(g, I, params, m=m, T=T)
        out = rep.to_json()
        out["params"] = {"delta": params.delta, "k": params.k, "t": params.t, "seed": params.seed,
                         "trials": params.trials, "verify": params.verify}
        if schedule:
            out["schedule"] = schedule
        _emit(args, out)
        return EXIT_FAIL if rep.violations else EXIT_OK

    return run


# -- pipeline -------------------------------------------------------------------------


def _planted(args):
    cfg = lc.GenConfig(
        n_left=args.n_left, n_right=args.n_right, L=args.L, R=args.R, left_degree=args.left_degree,
        layer_sizes=_ints(args.layer_sizes), alphabets=_ints(args.alphabets),
        layer_degree=args.layer_degree, seed=args.seed,
    )
    if args.kind == "two-k":
        inst, A = lc.gen_planted_bipartite(cfg)
        return inst, A, red.build_2k_gadget(inst, args.q, args.k)
    inst, A = lc.gen_planted_layered(cfg)
    return inst, A, red.build_k1_gadget(inst, args.q, args.k)


def cmd_pipeline_completeness(args) -> int:
    inst, A, g = _planted(args)
    coloring = red.completeness_coloring(g, A)
    rep = red.verify_coloring(g, coloring, mode=args.mode, samples=args.samples, seed=args.seed, cap=args.cap)
    out = rep.to_json()
    out["gadget"] = red.gadget_summary(g)
    out["planted_fraction"] = lc.eval_assignment(inst, A).fraction
    _emit(args, out)
    return EXIT_OK if rep.monochromatic == 0 else EXIT_FAIL


def cmd_pipeline_soundness(args) -> int:
    inst, A, g = _planted(args)
    coloring = red.completeness_coloring(g, A)
    I = coloring.color_class(args.color)
    params, schedule = _decode_params(args, g.q)
    if args.kind == "two-k":
        rep = dec.decode_bipartite(g, I, params)
    else:
        rep = dec.decode_layered(g, I, params, m=args.m, T=args.T)
    out = {
        "gadget": red.gadget_summary(g),
        "independent_set_size": len(I),
        "mean_fraction": rep.mean_fraction,
        "expected_fraction": rep.expected_fraction,
        "fractions": list(rep.fractions),
        "floor": 1 / params.t**2 if params.t else None,
        "baseline": lc.random_labeling_baseline(inst, trials=args.baseline_trials, seed=args.seed),
        "violations": len(rep.violations),
        "heavy": len(rep.labels.heavy),
        "listed": len(rep.labels.lists),
    }
    if schedule:
        out["schedule"] = schedule
    _emit(args, out)
    return EXIT_OK


# -- parser ---------------------------------------------------------------------------


def _common(p, seed=True):
    if seed:
        p.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    p.add_argument("--tsv", action="store_true", help="flatten the report to tab-separated lines")
    p.add_argument("--report", default="-", help="where to write the report (default stdout)")


def _gadget_args(p, kind=True):
    p.add_argument("--instance", required=True, help="Label Cover instance JSON ('-' for stdin)")
    p.add_argument("--q", type=int, required=True, help="alphabet size of the cloud words")
    p.add_argument("--k", type=int, required=True, help="tuple size k (uniformity 2k or k+1)")
    if kind:
        p.add_argument("--kind", choices=["two-k", "k-plus-one"],
                       help="gadget kind (default: two-k for bipartite, k-plus-one for layered instances)")


def _target_args(p):
    p.add_argument("--hgr", help="explicit hypergraph in 'p hgr' format")
    p.add_argument("--instance", help="Label Cover instance JSON, for an implicit gadget")
    p.add_argument("--q", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--kind", choices=["two-k", "k-plus-one"])
    p.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive",
                   help="scan every legal edge shape or sample them (default exhaustive)")
    p.add_argument("--samples", type=int, default=1_000_000, help="probes in sampled mode (default 10^6)")
    p.add_argument("--cap", type=int, default=red.DEFAULT_CAP,
                   help="maximum predicate evaluations in exhaustive mode (default 5*10^7)")


def _decode_args(p):
    p.add_argument("--delta", type=float, help="heaviness threshold (default 1/(2q))")
    p.add_argument("--t", type=int, default=2, help="agreement cap for label lists (default 2)")
    p.add_argument("--budget", type=int, default=100_000, help="tuple search node budget (default 10^5)")
    p.add_argument("--trials", type=int, default=20, help="random labelings drawn (default 20)")
    p.add_argument("--verify", choices=["sampled", "exhaustive", "none"], default="sampled",
                   help="independence check before decoding (default sampled)")
    p.add_argument("--probes", type=int, default=1_000_000, help="probes for sampled verification (default 10^6)")
    p.add_argument("--paper-schedule", action="store_true",
                   help="derive t = ceil(c ln(1/delta)) and report ell = 2/delta^2, T = 16 t^2 ell/delta^2")
    p.add_argument("--c", type=float, default=1.0, help="constant c for --paper-schedule (default 1)")


def _planted_args(p):
    p.add_argument("--kind", choices=["two-k", "k-plus-one"], default="two-k")
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--n-left", type=int, default=4)
    p.add_argument("--n-right", type=int, default=2)
    p.add_argument("--L", type=int, default=3)
    p.add_argument("--R", type=int, default=2)
    p.add_argument("--left-degree", type=int, default=1)
    p.add_argument("--layer-sizes", default="2,2,2", help="layered: comma-separated layer sizes")
    p.add_argument("--alphabets", default="4,3,2", help="layered: comma-separated alphabet per layer")
    p.add_argument("--layer-degree", type=int)


def build_parser() -> argparse.ArgumentParser:
    root = _Parser(prog="gadgetlab", description=__doc__.splitlines()[0])
    groups = root.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def group(name, help_):
        return groups.add_parser(name, help=help_).add_subparsers(dest="command", required=True,
                                                                   parser_class=_Parser)

    g = group("lc", "Label Cover instances")
    p = g.add_parser("gen", help="generate a planted instance")
    p.add_argument("--kind", choices=["bipartite", "layered"], default="bipartite")
    p.add_argument("--n-left", type=int, default=4)
    p.add_argument("--n-right", type=int, default=2)
    p.add_argument("--L", type=int, default=3)
    p.add_argument("--R", type=int, default=2)
    p.add_argument("--left-degree", type=int, default=1)
    p.add_argument("--layer-sizes", help="layered: comma-separated layer sizes")
    p.add_argument("--alphabets", help="layered: comma-separated alphabet per layer")
    p.add_argument("--layer-degree", type=int, help="layered: neighbors per later layer (default all)")
    p.add_argument("--smoothness", type=float, help="layered: certify T-smoothness for |S| <= 3")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-", help="instance output (default stdout)")
    p.add_argument("--assignment-out", help="also write the planted labeling here")
    p.set_defaults(func=cmd_lc_gen)
    p = g.add_parser("check-smooth", help="worst collapse probabilities against |S|^2 ell / T")
    p.add_argument("--instance", required=True)
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--s-max", type=int, default=3, help="enumerate label sets up to this size (default 3)")
    p.add_argument("--samples", type=int, default=0, help="random larger sets per variable (default 0)")
    _common(p)
    p.set_defaults(func=cmd_lc_check_smooth)
    p = g.add_parser("check-dense", help="weak density against 1/m^2")
    p.add_argument("--instance", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--trials", type=int, default=200, help="random configurations on large instances")
    _common(p)
    p.set_defaults(func=cmd_lc_check_dense)
    p = g.add_parser("eval", help="fraction of constraints an assignment satisfies")
    p.add_argument("--instance", required=True)
    p.add_argument("--assignment", required=True)
    _common(p, seed=False)
    p.set_defaults(func=cmd_lc_eval)

    g = group("family", "words and agreeing families")
    p = g.add_parser("agreement", help="coordinates where all words agree")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("words", nargs="+", help="words as 0-based digit strings")
    _common(p, seed=False)
    p.set_defaults(func=cmd_family_agreement)
    p = g.add_parser("check", help="test the k-wise t-agreeing or t-intersecting property")
    p.add_argument("--family", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--property", choices=["agreeing", "intersecting"], default="agreeing")
    _common(p, seed=False)
    p.set_defaults(func=cmd_family_check)
    p = g.add_parser("shift", help="shift one coordinate of a binary family")
    p.add_argument("--family", required=True)
    p.add_argument("--i", type=int, required=True, help="1-based coordinate")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_family_shift)
    p = g.add_parser("monotonize", help="shift coordinates 1..n repeatedly until nothing moves")
    p.add_argument("--family", required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_family_monotonize)
    p = g.add_parser("search", help="largest k-wise t-agreeing family in [q]^n")
    for name in ("q", "n", "k", "t"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--method", choices=["exact", "branch_and_bound", "greedy"], default="branch_and_bound")
    p.add_argument("--node-limit", type=int)
    p.add_argument("--restarts", type=int, default=32, help="greedy restarts (default 32)")
    p.add_argument("--compare", action="store_true", help="report the result next to the closed-form bounds")
    _common(p)
    p.set_defaults(func=cmd_family_search)

    g = group("bounds", "closed-form family size bounds")
    for name, fn, help_ in (
        ("ft", fam.ft_ternary_bound, "exact ternary bound, needs n >= 3t-1"),
        ("golden", fam.golden_ratio_bound, "2^n ((sqrt 5 - 1)/2)^t"),
        ("simplified", fam.simplified_ternary_bound, "3^(n - t/10)"),
    ):
        p = g.add_parser(name, help=help_)
        p.add_argument("--n", required=True, help="value, list a,b,c or inclusive range a:b")
        p.add_argument("--t", required=True, help="value, list a,b,c or inclusive range a:b")
        _common(p, seed=False)
        p.set_defaults(func=_bound_cmd(fn))

    g = group("reduce", "build gadget hypergraphs")
    for name, kind in (("two-k", "two-k"), ("k-plus-one", "k-plus-one")):
        p = g.add_parser(name, help=f"summarize the {kind} gadget of an instance")
        _gadget_args(p, kind=False)
        _common(p, seed=False)
        p.set_defaults(func=cmd_reduce(kind))
    p = g.add_parser("materialize", help="enumerate every edge into a 'p hgr' file")
    _gadget_args(p)
    p.add_argument("--out", default="-", help="hypergraph output (default stdout)")
    p.add_argument("--vertex-map", help="also write the vertex table as JSON")
    p.add_argument("--max-vertices", type=int, default=100_000)
    p.add_argument("--max-edges", type=int, default=5_000_000)
    p.add_argument("--cap", type=int, default=red.DEFAULT_CAP)
    _common(p, seed=False)
    p.set_defaults(func=cmd_reduce_materialize)

    g = group("verify", "check colorings and independent sets")
    p = g.add_parser("coloring", help="count monochromatic edges")
    _target_args(p)
    p.add_argument("--coloring", help="coloring JSON")
    p.add_argument("--assignment", help="labeling JSON; colors each gadget vertex by its word at the label")
    _common(p)
    p.set_defaults(func=cmd_verify_coloring)
    p = g.add_parser("independent", help="look for an edge inside a vertex set")
    _target_args(p)
    p.add_argument("--set", required=True, help="vertex set JSON (1-based indices)")
    _common(p)
    p.set_defaults(func=cmd_verify_independent)

    g = group("solve", "exact and heuristic solvers on explicit hypergraphs")
    p = g.add_parser("mis", help="maximum independent set")
    p.add_argument("--hgr", required=True)
    p.add_argument("--method", choices=["exact", "greedy", "local_search"], default="exact")
    p.add_argument("--iters", type=int, default=2000)
    p.add_argument("--node-limit", type=int, default=solvers.DEFAULT_NODE_LIMIT, help="default 10^8")
    p.add_argument("--initial", help="independent vertex set to start heuristics from")
    _common(p)
    p.set_defaults(func=cmd_solve_mis)
    p = g.add_parser("color", help="decide whether a proper c-coloring exists")
    p.add_argument("--hgr", required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--node-limit", type=int, default=solvers.DEFAULT_NODE_LIMIT, help="default 10^8")
    p.add_argument("--out", help="write the coloring found here")
    _common(p, seed=False)
    p.set_defaults(func=cmd_solve_color)

    g = group("decode", "recover a labeling from an independent set")
    for name in ("bipartite", "layered"):
        p = g.add_parser(name)
        _gadget_args(p, kind=False)
        p.add_argument("--set", required=True, help="independent set JSON (1-based indices)")
        _decode_args(p)
        if name == "layered":
            p.add_argument("--m", type=int, help="weak density parameter to compare the chosen pair against")
            p.add_argument("--T", type=float, help="smoothness parameter, reported as t^2 ell / T")
            p.add_argument("--layer-delta", type=float, help="share of heavy clouds a layer needs (default delta)")
        _common(p)
        p.set_defaults(func=cmd_decode("two-k" if name == "bipartite" else "k-plus-one"))

    g = group("pipeline", "end-to-end runs on planted instances")
    p = g.add_parser("completeness", help="planted instance -> gadget -> labeling coloring -> verify")
    _planted_args(p)
    p.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--cap", type=int, default=red.DEFAULT_CAP)
    _common(p)
    p.set_defaults(func=cmd_pipeline_completeness)
    p = g.add_parser("soundness", help="planted instance -> gadget -> color class -> decode")
    _planted_args(p)
    _decode_args(p)
    p.add_argument("--color", type=int, default=1, help="color class used as the independent set")
    p.add_argument("--m", type=int)
    p.add_argument("--T", type=float)
    p.add_argument("--baseline-trials", type=int, default=200)
    _common(p)
    p.set_defaults(func=cmd_pipeline_soundness)
    return root


def _error(kind: str, message: str, code: int, **extra) -> int:
    payload = {"error": kind, "message": message, "exit_code": code}
    payload.update({k: v for k, v in extra.items() if v is not None})
    sys.stderr.write(json.dumps(payload, sort_keys=True) + "\n")
    return code


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _workers()
        return args.func(args)
    except UsageError as exc:
        return _error("UsageError", str(exc), EXIT_USAGE)
    except Infeasible as exc:
        return _error("Infeasible", str(exc), EXIT_INFEASIBLE, estimate=exc.estimate)
    except NotIndependent as exc:
        witness = [v + 1 for v in exc.witness] if exc.witness else None
        return _error("NotIndependent", str(exc), EXIT_FAIL, witness=witness)
    except (NoHeavyClouds, NoLayerPair, HypothesisViolated) as exc:
        return _error(type(exc).__name__, str(exc), EXIT_FAIL)
    except (GadgetLabError, ValueError, KeyError, OSError) as exc:
        return _error(type(exc).__name__, str(exc), EXIT_USAGE)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
