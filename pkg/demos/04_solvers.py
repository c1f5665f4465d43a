"""Exact independent sets and colorings on small materialized gadgets.

Run: python demos/04_solvers.py
"""

from gadgetlab.hypergraph import ExplicitHypergraph
from gadgetlab.labelcover import BipartiteInstance, Constraint, GenConfig, gen_planted_layered
from gadgetlab.reduction import build_2k_gadget, build_k1_gadget, materialize, verify_coloring
from gadgetlab.solvers import exists_proper_coloring, is_independent, max_independent_set

# one label on each side: every cross-cloud 4-tuple is an edge
inst = BipartiteInstance(2, 1, 1, 1, (Constraint(0, 0, (1,)), Constraint(1, 0, (1,))))
h = materialize(build_2k_gadget(inst, 3, 2))
best = max_independent_set(h)
print("L=1 toy: %d vertices, %d edges, independence number %d" % (h.n_vertices, len(h.edges), best.size))

lay, _ = gen_planted_layered(GenConfig(layer_sizes=(2, 2), alphabets=(2, 2), seed=1))
h = materialize(build_k1_gadget(lay, 3, 2))
best = max_independent_set(h)
print("k-plus-one toy: alpha = %d/%d, %d search nodes" % (best.size, h.n_vertices, best.nodes))
print("independent:", is_independent(h, best.vertices).independent)
for c in (1, 2, 3):
    found = exists_proper_coloring(h, c)
    ok = found.coloring is not None and verify_coloring(h, found.coloring).monochromatic == 0
    print(f"proper {c}-coloring exists: {found.coloring is not None} (verified: {ok})")

tri = ExplicitHypergraph(3, ((0, 1), (1, 2), (0, 2)), 2)
print("triangle 2-colorable:", exists_proper_coloring(tri, 2).coloring is not None)
