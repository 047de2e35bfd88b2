"""
Normal-approximation bounds on the binomial CDF
===============================================

C(k) = Phi(sign(k - np) sqrt(2 n H(k/n, p))) sandwiches the binomial CDF:
C(k) <= P{X <= k} <= C(k + 1).  The two-sided check below runs over a grid
of n and p, then looks at the limits that control the Tauberian step.
"""

from fuzzy_euler import binomial_cdf_exact, proof_limit_terms, verify_bounds, zubkov_serov_c
from fuzzy_euler.binomial import deviation_bound_terms

n, p = 30, 0.3
for k in (3, 6, 9, 12, 15):
    lo, hi = zubkov_serov_c(n, p, k), zubkov_serov_c(n, p, k + 1)
    print(f"k={k:2d}  {lo:.6f} <= {binomial_cdf_exact(n, p, k):.6f} <= {hi:.6f}")

bad = sum(not r.passed for m in range(1, 101) for q in (0.1, 0.25, 0.5, 0.9)
          for r in verify_bounds(m, q))
print("violations for n <= 100:", bad)

# L_n and R_n tend to (q+1)/(2q) and q/(2(q+1)) with error of order 1/n.
for q in (1, 2, 3):
    for m in (10**3, 10**6):
        left, right = proof_limit_terms(m, q)
        print(f"q={q} n={m:>7d}  L_n - limit = {left - (q + 1) / (2 * q):+.3e}"
              f"  R_n - limit = {right - q / (2 * (q + 1)):+.3e}")

# The normalised mean absolute deviation stays below its erf majorant.
t = deviation_bound_terms(400, 2)
print(f"E|X - n|/sqrt(n) = {t['mean_abs_dev']:.4f} <= {t['erf_bound']:.4f} <= {t['limit_bound']:.4f}")
