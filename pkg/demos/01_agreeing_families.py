"""Agreeing families: exhaustive search, shifting and the closed-form bounds.

Run: python demos/01_agreeing_families.py
"""

import math

from gadgetlab.families import (
    Family,
    bound_report,
    ft_ternary_bound,
    golden_ratio_bound,
    is_k_wise_t_agreeing,
    is_k_wise_t_intersecting,
    is_upward_closed,
    max_agreeing_family,
    monotonize,
)

# largest 3-wise t-agreeing binary families vs the golden-ratio bound
for n in (3, 4, 5):
    for t in range(1, n + 1):
        out = max_agreeing_family(n, 2, 3, t)
        print(f"q=2 n={n} t={t}: max {out.max_size:3d}  bound {math.floor(golden_ratio_bound(n, t)):3d}")

# shifting pushes a family up without losing agreement
fam = Family.from_digits(["0011", "0101", "0110", "0111"], 2)
up = monotonize(fam)
print("\nbefore:", fam.digits(), "agreeing(3,1):", is_k_wise_t_agreeing(fam, 3, 1))
print("after: ", up.digits(), "upward closed:", is_upward_closed(up),
      "intersecting(3,1):", is_k_wise_t_intersecting(up, 3, 1))

# ternary formula and where it stops bounding the true maximum
print("\nternary formula at (7, 2):", ft_ternary_bound(7, 2))
rep = bound_report(2, 3, 2, 1)
print("n=2 q=3 k=2 t=1: oracle", rep["oracle"], "formula", rep["bounds"]["ft_ternary"]["value"],
      "discrepancy", rep["discrepancy"])
