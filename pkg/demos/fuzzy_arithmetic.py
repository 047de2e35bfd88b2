"""
Fuzzy numbers as stacks of intervals
====================================

A fuzzy number is stored through its alpha-cuts: one closed interval per
level on a grid in [0, 1].  Addition and scaling act interval by interval.
"""

import numpy as np

from fuzzy_euler import add, crisp, metric_d, scale, triangular, zero

u = triangular(0.0, 1.0, 2.0)
v = triangular(-1.0, 0.0, 3.0, levels=np.linspace(0, 1, 5))
print(u)
print("cut at 0.5:", u.alpha_cut(0.5))

# Grids are merged before any binary operation, so u + v lives on the union.
w = add(u, v)
print("u + v on", w.levels.size, "levels, support", w.support, "core", w.core)

# Negative scalars flip the interval.
print("-u at alpha=0.25:", scale(-1.0, u).alpha_cut(0.25))

# The supremum distance between two fuzzy numbers.
print("D(u, v) =", metric_d(u, v))
print("D(1, -2) =", metric_d(crisp(1.0), crisp(-2.0)))

# There are no additive inverses: u + (-u) is a symmetric fuzzy zero, not 0.
print("D(u + (-u), 0) =", metric_d(add(u, scale(-1.0, u)), zero()))

# Distributivity over scalars needs equal signs.
same = metric_d(scale(2.0 + 3.0, u), add(scale(2.0, u), scale(3.0, u)))
mixed = metric_d(scale(1.0 - 1.0, u), add(scale(1.0, u), scale(-1.0, u)))
print(f"same-sign defect {same:.1e}, mixed-sign defect {mixed}")
