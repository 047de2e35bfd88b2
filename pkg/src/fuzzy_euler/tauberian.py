"""Gap statistics for Tauberian conditions and finite-prefix rate verdicts.

``sequence_gap`` computes ``g_n = sqrt(n) D(u_{n-1}, u_n)`` and
``series_gap`` computes ``g_n = sqrt(n) D(u_n, 0)``.  Whether such a
statistic is o(1) or O(1) is an asymptotic question; ``classify_rate``
only reports what a finite prefix looks like, using the thresholds below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fuzzy import SequenceLike, as_sequence, metric_d, zero

__all__ = [
    "GapSeries",
    "RateVerdict",
    "SLOPE_THRESHOLD",
    "VANISH_RATIO",
    "classify_rate",
    "knopp_gap",
    "sequence_gap",
    "series_gap",
]

SLOPE_THRESHOLD = 0.1
VANISH_RATIO = 0.1
VERDICTS = ("vanishing", "bounded", "unbounded", "inconclusive")


@dataclass(frozen=True)
class GapSeries:
    """Nonnegative values ``g_n`` for ``n = start, start + 1, ...``."""

    values: np.ndarray
    start: int = 1

    def __post_init__(self) -> None:
        v = np.array(self.values, dtype=float)
        if v.ndim != 1:
            raise ValueError("gap values must be one-dimensional")
        if not np.all(np.isfinite(v)) or np.any(v < 0):
            raise ValueError("gap values must be finite and nonnegative")
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.start, self.start + self.values.size)

    def __len__(self) -> int:
        return self.values.size


@dataclass(frozen=True)
class RateVerdict:
    classification: str
    tail_sup: float
    slope_estimate: float
    head_sup: float = float("nan")

    def as_dict(self) -> dict:
        return {
            "classification": self.classification,
            "tail_sup": self.tail_sup,
            "slope": self.slope_estimate,
            "head_sup": self.head_sup,
        }


def sequence_gap(seq: SequenceLike) -> GapSeries:
    """``g_n = sqrt(n) D(u_{n-1}, u_n)`` for ``n = 1 .. len - 1``."""
    seq = as_sequence(seq)
    if len(seq) < 2:
        raise ValueError("sequence_gap needs at least two terms")
    t = seq.terms
    g = [math.sqrt(n) * metric_d(t[n - 1], t[n]) for n in range(1, len(t))]
    return GapSeries(np.array(g), start=1)


def series_gap(terms: SequenceLike) -> GapSeries:
    """``g_n = sqrt(n) D(u_n, 0)`` for ``n = 0 .. len - 1``.

    On crisp terms this is ``sqrt(n) |a_n|``, the quantity in Knopp's
    condition ``a_n = o(1/sqrt(n))``.
    """
    terms = as_sequence(terms)
    g = [math.sqrt(n) * metric_d(u, zero(u.levels)) for n, u in enumerate(terms)]
    return GapSeries(np.array(g), start=0)


def knopp_gap(terms) -> GapSeries:
    """``g_n = sqrt(n) |a_n|`` for a real series ``a_0, a_1, ...``."""
    a = np.asarray(terms, dtype=float)
    if a.ndim != 1 or a.size == 0:
        raise ValueError("terms must be a nonempty 1-d array")
    return GapSeries(np.sqrt(np.arange(a.size)) * np.abs(a), start=0)


def classify_rate(g: GapSeries, tail_fraction: float = 0.25) -> RateVerdict:
    """Classify the trailing behaviour of a gap series.

    The tail is the last ``tail_fraction`` of the indices (at least two
    points); the head is everything before it.  ``slope`` is the
    least-squares slope of ``log g_n`` against ``log n`` over the positive
    tail entries.  Verdicts:

    * vanishing: tail sup below ``0.1 * head sup`` and slope <= -0.1
      (or the tail is identically zero);
    * unbounded: slope >= 0.1 and tail sup above head sup;
    * bounded: ``|slope| < 0.1``;
    * inconclusive otherwise.
    """
    if not isinstance(g, GapSeries):
        g = GapSeries(np.asarray(g, dtype=float))
    if not 0.0 < tail_fraction < 1.0:
        raise ValueError("tail_fraction must lie in (0, 1)")
    if len(g) < 8:
        raise ValueError(f"need at least 8 gap values, got {len(g)}")
    idx = g.indices
    vals = g.values
    keep = idx >= 1  # log n is undefined at n = 0
    idx, vals = idx[keep], vals[keep]
    n_tail = max(2, int(math.ceil(tail_fraction * vals.size)))
    head, tail = vals[:-n_tail], vals[-n_tail:]
    head_sup = float(head.max()) if head.size else 0.0
    tail_sup = float(tail.max())

    if tail_sup == 0.0:
        return RateVerdict("vanishing", 0.0, -math.inf, head_sup)

    pos = tail > 0
    if pos.sum() >= 2:
        x = np.log(idx[-n_tail:][pos])
        y = np.log(tail[pos])
        slope = float(np.polyfit(x, y, 1)[0])
    else:
        slope = -math.inf

    if tail_sup < VANISH_RATIO * head_sup and slope <= -SLOPE_THRESHOLD:
        label = "vanishing"
    elif slope >= SLOPE_THRESHOLD and tail_sup > head_sup:
        label = "unbounded"
    elif abs(slope) < SLOPE_THRESHOLD:
        label = "bounded"
    else:
        label = "inconclusive"
    return RateVerdict(label, tail_sup, slope, head_sup)
