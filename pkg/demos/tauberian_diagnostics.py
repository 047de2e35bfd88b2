"""
When do Euler means force ordinary convergence?
===============================================

If the means converge and sqrt(n) D(u_{n-1}, u_n) tends to zero, the
sequence converges as well.  The gap statistic is computed for a few
sequences and its tail is classified.
"""

import math

import numpy as np

from fuzzy_euler import add, classify_rate, crisp, detect_limit, metric_d, sequence_gap
from fuzzy_euler.generators import convergent_sequence, generate_example, random_fuzzy

rng = np.random.default_rng(3)
mu = random_fuzzy(rng)

cases = {
    "geometric perturbation": convergent_sequence(rng, mu, 200, kind="geometric"),
    "1/n^2 perturbation": convergent_sequence(rng, mu, 400, kind="power", power=2.0),
    "(-1)^n/sqrt(n) shift": [add(mu, crisp((-1) ** n / math.sqrt(n + 1), mu.levels)) for n in range(400)],
    "oscillating example": generate_example(199),
}

for name, seq in cases.items():
    v = classify_rate(sequence_gap(seq))
    lim = detect_limit(seq, tol=1e-6, window=10)
    found = "none" if lim is None else f"D to mu {metric_d(lim, mu):.1e}"
    print(f"{name:24s} {v.classification:12s} tail sup {v.tail_sup:9.3e}  "
          f"slope {v.slope_estimate:+.2f}  limit: {found}")
