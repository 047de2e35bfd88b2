"""
Euler sums of real series
=========================

Crisp fuzzy numbers are real numbers, so the same machinery sums ordinary
series.  Grandi's series 1 - 1 + 1 - ... has E_1 sum 1/2, and the slowly
converging alternating harmonic series is accelerated.
"""

import math

import numpy as np

from fuzzy_euler import classify_rate, crisp, euler_transform_real, series_gap
from fuzzy_euler.generators import alternating_harmonic_terms

grandi = np.cumsum([(-1.0) ** k for k in range(30)])
print("Grandi partial sums:", grandi[:6], "...")
print("E_1 means:", euler_transform_real(grandi, p=1.0)[:6], "...")

terms = [(-1.0) ** k / (k + 1) for k in range(30)]
sums = np.cumsum(terms)
means = euler_transform_real(sums, p=1.0)
for n in (5, 10, 20, 29):
    print(f"n={n:2d}  |s_n - ln 2| = {abs(sums[n] - math.log(2)):.1e}"
          f"   |t_n - ln 2| = {abs(means[n] - math.log(2)):.1e}")

# The series gap sqrt(n) |a_n| tells Grandi's series apart from 1/n terms.
grandi_terms = [crisp((-1.0) ** k) for k in range(400)]
print("Grandi:", classify_rate(series_gap(grandi_terms)).classification)
print("alternating 1/n:", classify_rate(series_gap(alternating_harmonic_terms(400))).classification)
