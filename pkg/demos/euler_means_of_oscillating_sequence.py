"""
Euler means of an oscillating fuzzy sequence
============================================

The triangular numbers u_n with cuts [(-1)^n + a, (-1)^n + 2 - a] jump by 2
at every step, so the sequence itself has no limit.  Its Euler means settle
on the triangular number mu with cuts [a, 2 - a], and the distance to mu is
exactly (|p - 1| / (p + 1))^n.
"""

from fuzzy_euler import detect_limit, euler_transform, metric_d
from fuzzy_euler.generators import example_closed_form, example_limit, generate_example

seq = generate_example(40)
mu = example_limit()

print("raw sequence limit:", detect_limit(seq, tol=1e-6, window=5))

# p = 1 averages neighbours perfectly: every mean from n = 1 on is mu.
for p in (0.5, 1.0, 2.0, 4.0):
    means = euler_transform(seq, 40, p)
    row = [metric_d(means[n], mu) for n in (1, 5, 10, 40)]
    dev = max(abs(metric_d(t, mu) - example_closed_form(n, p)) for n, t in enumerate(means))
    print(f"p={p:3.1f}  D(t_n, mu) at n=1,5,10,40: " + "  ".join(f"{d:.2e}" for d in row)
          + f"   max |D - closed form| = {dev:.1e}")

lim = detect_limit(euler_transform(seq, 40, 2.0), tol=1e-6, window=5)
print("limit of the E_2 means is mu:", metric_d(lim, mu) < 1e-6)
