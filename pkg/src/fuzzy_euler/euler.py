"""Euler means of sequences and series of fuzzy numbers.

The Euler mean of order ``p`` is

    t_n = (p + 1)^(-n) * sum_{k=0}^{n} C(n, k) p^(n-k) u_k,

a convex combination of ``u_0, ..., u_n`` whose weights are the
Binomial(n, 1/(p+1)) probabilities.  Since the weights are nonnegative
the mean is computed endpoint-wise on the alpha grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .fuzzy import (
    FuzzyNumber,
    FuzzySequence,
    SequenceLike,
    add,
    as_sequence,
    metric_d,
    weighted_sum,
)

__all__ = [
    "EulerParams",
    "EulerWeights",
    "ceiling_composition",
    "detect_limit",
    "euler_mean",
    "euler_transform",
    "euler_transform_real",
    "euler_weights",
    "partial_sums",
]


@dataclass(frozen=True)
class EulerParams:
    """Order ``p`` together with ``q = ceil(p)`` and ``r = (q - p)/(p + 1)``.

    Applying the means of order ``r`` to the means of order ``p`` gives the
    means of order ``q``.
    """

    p: float

    def __post_init__(self) -> None:
        p = float(self.p)
        if not (math.isfinite(p) and p > 0):
            raise ValueError(f"Euler order p must be positive and finite, got {self.p!r}")
        object.__setattr__(self, "p", p)

    @property
    def q(self) -> int:
        return math.ceil(self.p)

    @property
    def r(self) -> float:
        return (self.q - self.p) / (self.p + 1.0)


@dataclass(frozen=True)
class EulerWeights:
    n: int
    p: float
    w: np.ndarray

    def __len__(self) -> int:
        return self.w.size

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.w, dtype=dtype)


def euler_weights(n: int, p: float) -> EulerWeights:
    """Weights ``w_k = C(n, k) p^(n-k) / (p+1)^n`` for ``k = 0..n``.

    ``p = 0`` is the identity transform (all mass on ``k = n``).

    The weights are produced by the ratio recurrence
    ``w_{k+1} / w_k = (n - k) / ((k + 1) p)`` run outward from the mode and
    then normalised, which never forms a binomial coefficient or a power
    that could overflow or underflow before the tails do.
    """
    n = int(n)
    p = float(p)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not math.isfinite(p) or p < 0:
        raise ValueError(f"Euler order p must be finite and >= 0, got {p!r}")
    if p == 0.0:
        w = np.zeros(n + 1)
        w[n] = 1.0
        return EulerWeights(n, p, _frozen(w))

    w = np.zeros(n + 1)
    mode = min(n, int((n + 1) / (p + 1.0)))
    w[mode] = 1.0
    for k in range(mode, n):
        w[k + 1] = w[k] * (n - k) / ((k + 1) * p)
        if w[k + 1] == 0.0:
            break
    for k in range(mode, 0, -1):
        w[k - 1] = w[k] * k * p / (n - k + 1)
        if w[k - 1] == 0.0:
            break
    w /= math.fsum(w)
    return EulerWeights(n, p, _frozen(w))


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def euler_mean(seq: SequenceLike, n: int, p: float) -> FuzzyNumber:
    """The Euler mean ``t^p_n`` of the first ``n + 1`` terms."""
    seq = as_sequence(seq)
    if not 0 <= n < len(seq):
        raise IndexError(f"index {n} out of range for a sequence of length {len(seq)}")
    return weighted_sum(euler_weights(n, p).w, seq.terms[: n + 1])


def euler_transform(seq: SequenceLike, upto: int, p: float) -> FuzzySequence:
    """Euler means ``(t^p_0, ..., t^p_upto)``, all on the merged input grid."""
    seq = as_sequence(seq)
    if not 0 <= upto < len(seq):
        raise IndexError(f"upto={upto} needs at least {upto + 1} terms, got {len(seq)}")
    levels, lower, upper = seq[: upto + 1].endpoint_arrays()
    out = []
    for n in range(upto + 1):
        w = euler_weights(n, p).w
        out.append(FuzzyNumber(levels, w @ lower[: n + 1], w @ upper[: n + 1]))
    return FuzzySequence(tuple(out))


def euler_transform_real(values, upto: Optional[int] = None, p: float = 1.0) -> np.ndarray:
    """Euler means of a real sequence (the crisp special case)."""
    x = np.asarray(values, dtype=float)
    if upto is None:
        upto = x.size - 1
    if not 0 <= upto < x.size:
        raise IndexError(f"upto={upto} needs at least {upto + 1} values, got {x.size}")
    return np.array([euler_weights(n, p).w @ x[: n + 1] for n in range(upto + 1)])


def ceiling_composition(
    seq: SequenceLike, upto: int, params: EulerParams
) -> tuple[FuzzySequence, FuzzySequence]:
    """Both sides of ``E_r(E_p(u)) = E_q(u)`` with ``q = ceil(p)``.

    Returns ``(E_r applied to E_p(seq), E_q(seq))``; the two should agree
    term by term up to rounding.
    """
    if not isinstance(params, EulerParams):
        params = EulerParams(params)
    inner = euler_transform(seq, upto, params.p)
    composed = euler_transform(inner, upto, params.r)
    direct = euler_transform(seq, upto, params.q)
    return composed, direct


def partial_sums(terms: SequenceLike) -> FuzzySequence:
    """Partial sums ``s_n = u_0 + ... + u_n`` of a fuzzy series."""
    terms = as_sequence(terms)
    out = [terms[0]]
    for u in terms.terms[1:]:
        out.append(add(out[-1], u))
    return FuzzySequence(tuple(out))


def detect_limit(
    seq: SequenceLike, tol: float = 1e-8, window: int = 10
) -> Optional[FuzzyNumber]:
    """Finite-prefix Cauchy test on the trailing ``window`` terms.

    Returns the last term when every pairwise distance inside the window is
    at most ``tol``, otherwise ``None``.  This is a heuristic: it says
    nothing about terms beyond the prefix.
    """
    seq = as_sequence(seq)
    if window < 2:
        raise ValueError("window must be at least 2")
    if window > len(seq):
        raise ValueError(f"window {window} exceeds sequence length {len(seq)}")
    tail = seq.terms[-window:]
    for i in range(window):
        for j in range(i + 1, window):
            if metric_d(tail[i], tail[j]) > tol:
                return None
    return tail[-1]
