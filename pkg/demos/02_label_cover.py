"""Planted Label Cover instances and their structural checks.

Run: python demos/02_label_cover.py
"""

from gadgetlab.labelcover import (
    GenConfig,
    check_smoothness,
    check_weak_density,
    dumps_instance,
    eval_assignment,
    gen_planted_bipartite,
    gen_planted_layered,
    random_labeling_baseline,
)

inst, A = gen_planted_bipartite(GenConfig(n_left=6, n_right=3, L=4, R=3, left_degree=2, seed=1))
print("bipartite:", inst.degree_stats(), "biregular:", inst.is_biregular())
print("planted labeling satisfies", eval_assignment(inst, A).fraction)
print("random labelings satisfy   %.3f on average" % random_labeling_baseline(inst, trials=500))

lay, B = gen_planted_layered(GenConfig(layer_sizes=(3, 3, 3), alphabets=(4, 3, 2), seed=2))
print("\nlayered: %d layers, %d constraints" % (lay.ell, len(lay.edges)))
print("per layer pair:", eval_assignment(lay, B).per_pair)
print("smoothness (T=16):", check_smoothness(lay, 16).passed)
print("weak density (m=3):", check_weak_density(lay, 3).passed)
print("\nfirst lines of the JSON file format:")
print("\n".join(dumps_instance(inst).splitlines()[:6]))
