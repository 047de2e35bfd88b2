"""Normal-approximation bounds on the binomial CDF and their exact oracle.

For ``X ~ Binomial(n, p)`` and ``H(x, p)`` the Bernoulli relative entropy,

    C(0) = (1 - p)^n,   C(n) = 1 - p^n,
    C(k) = Phi(sgn(k - np) * sqrt(2 n H(k/n, p)))   for 0 < k < n,

and ``C(k) <= P{X <= k} <= C(k + 1)`` for ``k = 0, ..., n - 1``.

Also provided are the two sequences whose limits close the Tauberian
argument, and the weighted absolute deviation that those limits bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np
from scipy import special

__all__ = [
    "BoundCheckRecord",
    "binomial_cdf_exact",
    "binomial_cdf_rational",
    "binomial_pmf",
    "deviation_bound_terms",
    "proof_limit_terms",
    "relative_entropy",
    "std_normal_cdf",
    "verify_bounds",
    "zubkov_serov_c",
]

_SQRT2 = math.sqrt(2.0)


def _check_prob(p: float) -> float:
    p = float(p)
    if not 0.0 < p < 1.0:
        raise ValueError(f"p must lie in the open interval (0, 1), got {p!r}")
    return p


def relative_entropy(x: float, p: float) -> float:
    """``H(x, p) = x ln(x/p) + (1-x) ln((1-x)/(1-p))`` with ``0 ln 0 = 0``."""
    p = _check_prob(p)
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x must lie in [0, 1], got {x!r}")
    h = 0.0
    if x > 0.0:
        h += x * math.log(x / p)
    if x < 1.0:
        h += (1.0 - x) * math.log((1.0 - x) / (1.0 - p))
    # the exact value is nonnegative; clip rounding near x == p
    return max(h, 0.0)


def std_normal_cdf(x):
    """Standard normal CDF, ``(1 + erf(x / sqrt 2)) / 2``.

    Evaluated as ``erfc(-x / sqrt 2) / 2`` so the lower tail keeps relative
    accuracy.  Accepts scalars or arrays.
    """
    out = 0.5 * special.erfc(-np.asarray(x, dtype=float) / _SQRT2)
    return float(out) if np.ndim(out) == 0 else out


def zubkov_serov_c(n: int, p: float, k: int) -> float:
    """The bound ``C_{n,p}(k)`` for ``0 <= k <= n``."""
    n, k = int(n), int(k)
    p = _check_prob(p)
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in [0, {n}], got {k}")
    if k == 0:
        return (1.0 - p) ** n
    if k == n:
        return -math.expm1(n * math.log(p))
    sign = float(np.sign(k - n * p))
    return std_normal_cdf(sign * math.sqrt(2.0 * n * relative_entropy(k / n, p)))


def binomial_pmf(n: int, p: float) -> np.ndarray:
    """All probabilities ``P{X = i}``, ``i = 0..n``.

    Built from the mode outward with the ratio
    ``P{X = i+1} / P{X = i} = (n - i) p / ((i + 1)(1 - p))`` and normalised
    with an exactly rounded sum.
    """
    n = int(n)
    p = _check_prob(p)
    if n < 0:
        raise ValueError("n must be nonnegative")
    odds = p / (1.0 - p)
    f = np.zeros(n + 1)
    mode = min(n, int((n + 1) * p))
    f[mode] = 1.0
    for i in range(mode, n):
        f[i + 1] = f[i] * (n - i) * odds / (i + 1)
        if f[i + 1] == 0.0:
            break
    for i in range(mode, 0, -1):
        f[i - 1] = f[i] * i / ((n - i + 1) * odds)
        if f[i - 1] == 0.0:
            break
    return f / math.fsum(f)


def _compensated_cumsum(values: np.ndarray) -> np.ndarray:
    """Running sums with Neumaier compensation."""
    out = np.empty(values.size)
    total = comp = 0.0
    for i, v in enumerate(values.tolist()):
        t = total + v
        if abs(total) >= abs(v):
            comp += (total - t) + v
        else:
            comp += (v - t) + total
        total = t
        out[i] = total + comp
    return out


def _cdf_vector(n: int, p: float) -> np.ndarray:
    pmf = binomial_pmf(n, p)
    head = _compensated_cumsum(pmf)
    # upper tails summed from the right: P{X > k} for k = 0..n
    tail = np.append(_compensated_cumsum(pmf[:0:-1])[::-1], 0.0)
    return np.where(head <= 0.5, head, 1.0 - tail)


def binomial_cdf_exact(n: int, p: float, k: int) -> float:
    """``P{X_{n,p} <= k}`` summed in floating point with compensation."""
    n, k = int(n), int(k)
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in [0, {n}], got {k}")
    pmf = binomial_pmf(n, p)
    head = math.fsum(pmf[: k + 1])
    if head <= 0.5:
        return head
    return 1.0 - math.fsum(pmf[k + 1 :])


def binomial_cdf_rational(n: int, p: Union[Fraction, int, str], k: int) -> Fraction:
    """Exact ``P{X_{n,p} <= k}`` for a rational ``p``."""
    p = Fraction(p)
    if not 0 < p < 1:
        raise ValueError("p must lie in (0, 1)")
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in [0, {n}], got {k}")
    return sum(
        (math.comb(n, i) * p**i * (1 - p) ** (n - i) for i in range(k + 1)),
        Fraction(0),
    )


@dataclass(frozen=True)
class BoundCheckRecord:
    n: int
    p: float
    k: int
    lower: float
    exact: float
    upper: float
    passed: bool

    @property
    def tight(self) -> bool:
        """Whether either side holds with equality away from saturation at 0 or 1."""
        if not 0.0 < self.exact < 1.0 - 1e-15:
            return False
        return self.lower == self.exact or self.exact == self.upper


def _c_vector(n: int, p: float) -> np.ndarray:
    c = np.empty(n + 1)
    c[0] = (1.0 - p) ** n
    c[n] = -math.expm1(n * math.log(p))
    if n > 1:
        k = np.arange(1, n)
        x = k / n
        h = x * np.log(x / p) + (1.0 - x) * np.log((1.0 - x) / (1.0 - p))
        z = np.sign(k - n * p) * np.sqrt(2.0 * n * np.maximum(h, 0.0))
        c[1:n] = std_normal_cdf(z)
    return c


def verify_bounds(n: int, p: float, slack: float = 1e-12) -> list[BoundCheckRecord]:
    """Check ``C(k) <= P{X <= k} <= C(k+1)`` for every ``k < n``."""
    n = int(n)
    p = _check_prob(p)
    if n < 1:
        raise ValueError("n must be at least 1")
    c = _c_vector(n, p)
    cdf = _cdf_vector(n, p)
    records = []
    for k in range(n):
        lo, ex, hi = float(c[k]), float(cdf[k]), float(c[k + 1])
        ok = lo <= ex + slack and ex <= hi + slack
        records.append(BoundCheckRecord(n, p, k, lo, ex, hi, ok))
    return records


def _log1p_remainder(x: float) -> float:
    """``log1p(x)/x - 1 + x/2``, accurate also for tiny ``x``."""
    if abs(x) < 0.05:
        # alternating tail of the series: sum_{j>=2} (-1)^j x^j / (j + 1)
        total, term = 0.0, x * x
        for j in range(2, 40):
            total += term / (j + 1)
            term *= -x
        return total
    return math.log1p(x) / x - 1.0 + 0.5 * x


def proof_limit_terms(n: int, q: int) -> tuple[float, float]:
    """The sequences ``(L_n, R_n)`` bounding the deviation in the Tauberian step.

    ``L_n = n ln( ((n+1)/n)^(n+1) ((qn-1)/(qn))^(qn-1) )`` tends to
    ``(q+1)/(2q)`` and
    ``R_n = n ln( ((q+1)(n-1)/((q+1)n-1))^(n-1) ((q+1)n/((q+1)n-1))^(qn) )``
    tends to ``q/(2(q+1))``.

    Both logarithms are sums of two O(1) terms that cancel to O(1/n).  Each
    ``m ln(1 + 1/m)`` is split as ``1 - 1/(2m) + remainder`` so the
    constants cancel exactly and only O(1/n) pieces are added.
    """
    n, q = int(n), int(q)
    if n < 2:
        raise ValueError("n must be at least 2")
    if q < 1:
        raise ValueError("q must be a positive integer")
    h = 1.0 / n
    g = 1.0 / (q * n)
    left = (
        -0.5 * h - 0.5 * g
        + _log1p_remainder(h) - _log1p_remainder(-g)
        + math.log1p(h) - math.log1p(-g)
    )
    m = (q + 1) * n - 1
    a = q / m
    b = 1.0 / m
    right = q / (q + 1) * (
        -0.5 * a - 0.5 * b
        - _log1p_remainder(-a) + _log1p_remainder(b)
        - math.log1p(-a) + math.log1p(b)
    )
    return n * left, n * right


def deviation_bound_terms(n: int, q: int) -> dict[str, float]:
    """Quantities from the deviation estimate at the heart of the Tauberian step.

    With ``N = (q+1) n`` and ``X ~ Binomial(N, 1/(q+1))`` (the Euler weights
    of order ``q`` at index ``N``):

    * ``mean_abs_dev``: ``E|X - n| / sqrt(n)``, summed directly;
    * ``split_form``: ``2 sqrt(n) (P{X <= n} - P{Y <= n-1})`` with
      ``Y ~ Binomial(N - 1, 1/(q+1))``, equal to ``mean_abs_dev``;
    * ``sum1``, ``sum1_upper``: ``P{X <= n}`` and its bound ``C_{N,1/(q+1)}(n+1)``;
    * ``sum2``, ``sum2_lower``: ``P{Y <= n-1}`` and its bound ``C_{N-1,1/(q+1)}(n-1)``;
    * ``erf_bound``: ``sqrt(n) (erf(sqrt(L_n/n)) + erf(sqrt(R_n/n)))``;
    * ``limit_bound``: ``(2/sqrt(pi)) (sqrt(L_n) + sqrt(R_n))``, which majorises
      ``erf_bound`` because ``erf(x) <= 2x/sqrt(pi)``.
    """
    n, q = int(n), int(q)
    if n < 2:
        raise ValueError("n must be at least 2")
    big = (q + 1) * n
    prob = 1.0 / (q + 1)
    pmf = binomial_pmf(big, prob)
    dev = math.fsum(pmf * np.abs(n - np.arange(big + 1))) / math.sqrt(n)
    sum1 = binomial_cdf_exact(big, prob, n)
    sum2 = binomial_cdf_exact(big - 1, prob, n - 1)
    left, right = proof_limit_terms(n, q)
    return {
        "mean_abs_dev": dev,
        "split_form": 2.0 * math.sqrt(n) * (sum1 - sum2),
        "sum1": sum1,
        "sum1_upper": zubkov_serov_c(big, prob, n + 1),
        "sum2": sum2,
        "sum2_lower": zubkov_serov_c(big - 1, prob, n - 1),
        "erf_bound": math.sqrt(n)
        * (math.erf(math.sqrt(left / n)) + math.erf(math.sqrt(right / n))),
        "limit_bound": 2.0 / math.sqrt(math.pi) * (math.sqrt(left) + math.sqrt(right)),
    }
