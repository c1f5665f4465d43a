"""Build both gadget hypergraphs and check that a satisfying labeling colors them properly.

Run: python demos/03_gadget_completeness.py
"""

from gadgetlab.hypergraph import dumps_hgr
from gadgetlab.labelcover import GenConfig, gen_planted_bipartite, gen_planted_layered
from gadgetlab.reduction import (
    build_2k_gadget,
    build_k1_gadget,
    completeness_coloring,
    gadget_summary,
    is_edge,
    materialize,
    verify_coloring,
)

inst, A = gen_planted_bipartite(GenConfig(n_left=4, n_right=2, L=3, R=2, left_degree=2, seed=7))
g = build_2k_gadget(inst, q=3, k=2)
print("two-k gadget:", gadget_summary(g))
col = completeness_coloring(g, A)
print("monochromatic edges under the labeling coloring:", verify_coloring(g, col).monochromatic)

# not every cross-cloud tuple is an edge; is_edge evaluates the rule directly
x1, x2 = ("u", 0), ("u", 1)
tup = [v for v in g.vertex_table() if v.var == x1][:2] + [v for v in g.vertex_table() if v.var == x2][:2]
print("first words of two clouds form an edge:", is_edge(g, tup))

lay, B = gen_planted_layered(GenConfig(layer_sizes=(2, 2, 2), alphabets=(3, 2, 2), seed=1))
h1 = build_k1_gadget(lay, q=2, k=2)
print("\nk-plus-one gadget:", gadget_summary(h1))
print("monochromatic edges:", verify_coloring(h1, completeness_coloring(h1, B)).monochromatic)
h = materialize(h1)
print("materialized: %d vertices, %d edges" % (h.n_vertices, len(h.edges)))
print(dumps_hgr(h).splitlines()[0])
