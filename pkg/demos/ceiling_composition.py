"""
Composing Euler methods
=======================

For non-integer p the method E_p followed by E_r with r = (q - p)/(p + 1),
q = ceil(p), is the same as E_q.  Both sides are computed here and compared
term by term.
"""

import numpy as np

from fuzzy_euler import EulerParams, ceiling_composition, metric_d
from fuzzy_euler.generators import generate_example, random_fuzzy

rng = np.random.default_rng(7)
sequences = {
    "example": generate_example(20),
    "random": [random_fuzzy(rng) for _ in range(21)],
}

for p in (0.5, 1.5, 2.7):
    params = EulerParams(p)
    for name, seq in sequences.items():
        composed, direct = ceiling_composition(seq, 20, params)
        worst = max(metric_d(a, b) for a, b in zip(composed, direct))
        print(f"p={p}  q={params.q}  r={params.r:.4f}  {name:8s} max D = {worst:.1e}")
