"""Decode a labeling from an independent set of a gadget and compare with random labelings.

Run: python demos/05_decoding.py
"""

import warnings

from gadgetlab.decode import DecodeParams, cloud_label_lists, decode_bipartite, decode_layered, star_pick
from gadgetlab.labelcover import GenConfig, gen_planted_bipartite, gen_planted_layered, random_labeling_baseline
from gadgetlab.reduction import build_2k_gadget, build_k1_gadget, completeness_coloring

print("star_pick on an intersecting family:", star_pick([{1, 2}, {1, 3}, {2, 3}], d=2, t=2))

with warnings.catch_warnings():
    warnings.simplefilter("ignore")  # R > L on purpose
    inst, A = gen_planted_bipartite(GenConfig(n_left=6, n_right=4, L=4, R=6, left_degree=2, seed=0))
q = 3
g = build_2k_gadget(inst, q, 2)
I = completeness_coloring(g, A).color_class(1)
params = DecodeParams(delta=1 / (2 * q), k=2, t=2, verify="exhaustive")
lists = cloud_label_lists(g, I, params)
print("\nheavy clouds:", len(lists.heavy), "example list:", sorted(lists.lists[("u", 0)]), "planted:", A[("u", 0)])
rep = decode_bipartite(g, I, params)
print("decoded fraction %.3f (expected %.3f), random baseline %.3f"
      % (rep.mean_fraction, rep.expected_fraction, random_labeling_baseline(inst, trials=500)))

lay, B = gen_planted_layered(GenConfig(layer_sizes=(3, 3, 3), alphabets=(4, 3, 2), seed=2))
h = build_k1_gadget(lay, 2, 3)
rep = decode_layered(h, completeness_coloring(h, B).color_class(1), DecodeParams(delta=0.25, k=3, t=2), m=3, T=16)
print("\nlayered: pair", rep.extra["layer_pair"], "fraction %.3f" % rep.mean_fraction,
      "max disjointness", rep.extra["max_disjointness"])
