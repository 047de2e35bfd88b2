"""Fuzzy numbers represented by sampled alpha-level intervals.

A fuzzy number is stored as three aligned arrays: the alpha grid
``levels`` (strictly increasing, from 0 to 1) and the endpoint samples
``lower`` and ``upper`` of its level sets ``[u]_alpha``.  Between grid
nodes the endpoint functions are linear, so sums, nonnegative weighted
sums and scalar multiples computed node-wise are exact, and the supremum
metric is attained at a node.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union, overload

import numpy as np

__all__ = [
    "DEFAULT_LEVELS",
    "MONOTONE_SLACK",
    "FuzzyNumber",
    "FuzzySequence",
    "InvalidFuzzyNumber",
    "add",
    "as_sequence",
    "crisp",
    "merge_grids",
    "metric_d",
    "refine_to_grid",
    "scale",
    "trapezoidal",
    "triangular",
    "weighted_sum",
    "zero",
]

DEFAULT_LEVELS = np.linspace(0.0, 1.0, 101)
DEFAULT_LEVELS.flags.writeable = False

# Rounding slack tolerated on the nesting invariants before projection.
MONOTONE_SLACK = 1e-12


class InvalidFuzzyNumber(ValueError):
    """Raised when endpoint data does not describe a fuzzy number."""


def _check_levels(levels: np.ndarray) -> None:
    if levels.ndim != 1 or levels.size < 2:
        raise InvalidFuzzyNumber("levels must be a 1-d array with at least 2 entries")
    if not np.all(np.isfinite(levels)):
        raise InvalidFuzzyNumber("levels must be finite")
    if levels[0] != 0.0 or levels[-1] != 1.0:
        raise InvalidFuzzyNumber("levels must start at 0 and end at 1")
    if np.any(np.diff(levels) <= 0):
        raise InvalidFuzzyNumber("levels must be strictly increasing")


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class FuzzyNumber:
    """A fuzzy number given by its alpha-cuts on a finite grid.

    Construction validates eagerly: endpoints must be finite, ``lower``
    nondecreasing and ``upper`` nonincreasing in alpha, and
    ``lower <= upper`` at every node.  Violations below
    :data:`MONOTONE_SLACK` are treated as rounding and projected away;
    larger ones raise :class:`InvalidFuzzyNumber`.

    Use :meth:`unchecked` to skip validation when the caller already
    guarantees the invariants.
    """

    levels: np.ndarray
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self) -> None:
        levels = np.asarray(self.levels, dtype=float)
        lower = np.asarray(self.lower, dtype=float)
        upper = np.asarray(self.upper, dtype=float)
        _check_levels(levels)
        if lower.shape != levels.shape or upper.shape != levels.shape:
            raise InvalidFuzzyNumber("lower and upper must match levels in length")
        if not (np.all(np.isfinite(lower)) and np.all(np.isfinite(upper))):
            raise InvalidFuzzyNumber("endpoint values must be finite")
        lower, upper = _project(lower, upper)
        object.__setattr__(self, "levels", _readonly(levels))
        object.__setattr__(self, "lower", _readonly(lower))
        object.__setattr__(self, "upper", _readonly(upper))

    @classmethod
    def unchecked(cls, levels, lower, upper) -> "FuzzyNumber":
        """Build without validation; for internal hot paths only."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "levels", _readonly(levels))
        object.__setattr__(obj, "lower", _readonly(lower))
        object.__setattr__(obj, "upper", _readonly(upper))
        return obj

    def alpha_cut(self, alpha: float) -> tuple[float, float]:
        """Return the level set ``[u]_alpha`` as a ``(lower, upper)`` pair."""
        if not 0.0 <= alpha <= 1.0:
            raise ValueError("alpha must lie in [0, 1]")
        return (
            float(np.interp(alpha, self.levels, self.lower)),
            float(np.interp(alpha, self.levels, self.upper)),
        )

    @property
    def support(self) -> tuple[float, float]:
        return float(self.lower[0]), float(self.upper[0])

    @property
    def core(self) -> tuple[float, float]:
        return float(self.lower[-1]), float(self.upper[-1])

    def is_crisp(self, atol: float = 0.0) -> bool:
        """True when every level set is the same single point."""
        spread = max(np.ptp(self.lower), np.ptp(self.upper), np.max(self.upper - self.lower))
        return bool(spread <= atol)

    def __add__(self, other: "FuzzyNumber") -> "FuzzyNumber":
        if not isinstance(other, FuzzyNumber):
            return NotImplemented
        return add(self, other)

    def __mul__(self, k: float) -> "FuzzyNumber":
        if isinstance(k, FuzzyNumber):
            return NotImplemented
        return scale(k, self)

    __rmul__ = __mul__

    def __neg__(self) -> "FuzzyNumber":
        return scale(-1.0, self)

    def __repr__(self) -> str:
        lo0, hi0 = self.support
        lo1, hi1 = self.core
        return (
            f"FuzzyNumber(support=[{lo0:g}, {hi0:g}], core=[{lo1:g}, {hi1:g}], "
            f"levels={self.levels.size})"
        )


def _project(lower: np.ndarray, upper: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Check the nesting invariants up to slack and snap rounding noise."""
    scale_ = max(1.0, float(np.max(np.abs(lower))), float(np.max(np.abs(upper))))
    slack = MONOTONE_SLACK * scale_
    if np.any(np.diff(lower) < -slack):
        raise InvalidFuzzyNumber("lower endpoint must be nondecreasing in alpha")
    if np.any(np.diff(upper) > slack):
        raise InvalidFuzzyNumber("upper endpoint must be nonincreasing in alpha")
    if np.any(lower - upper > slack):
        raise InvalidFuzzyNumber("lower endpoint exceeds upper endpoint")
    lower = np.maximum.accumulate(lower)
    upper = np.minimum.accumulate(upper)
    crossed = lower > upper
    if np.any(crossed):
        mid = 0.5 * (lower + upper)
        lower = np.where(crossed, mid, lower)
        upper = np.where(crossed, mid, upper)
    return lower, upper


def _levels_or_default(levels) -> np.ndarray:
    return DEFAULT_LEVELS if levels is None else np.asarray(levels, dtype=float)


def crisp(r: float, levels=None) -> FuzzyNumber:
    """Embed the real ``r`` as the fuzzy number with every level set ``{r}``."""
    r = float(r)
    if not math.isfinite(r):
        raise InvalidFuzzyNumber(f"crisp value must be finite, got {r!r}")
    lv = _levels_or_default(levels)
    full = np.full(lv.shape, r)
    return FuzzyNumber(lv, full, full)


def zero(levels=None) -> FuzzyNumber:
    """The neutral element of addition."""
    return crisp(0.0, levels)


def triangular(a: float, b: float, c: float, levels=None) -> FuzzyNumber:
    """Triangular number with support ``[a, c]`` and peak ``b``."""
    if not a <= b <= c:
        raise InvalidFuzzyNumber(f"triangular needs a <= b <= c, got {(a, b, c)}")
    lv = _levels_or_default(levels)
    return FuzzyNumber(lv, a + (b - a) * lv, c - (c - b) * lv)


def trapezoidal(a: float, b: float, c: float, d: float, levels=None) -> FuzzyNumber:
    """Trapezoidal number with support ``[a, d]`` and core ``[b, c]``."""
    if not a <= b <= c <= d:
        raise InvalidFuzzyNumber(f"trapezoidal needs a <= b <= c <= d, got {(a, b, c, d)}")
    lv = _levels_or_default(levels)
    return FuzzyNumber(lv, a + (b - a) * lv, d - (d - c) * lv)


def merge_grids(*numbers: FuzzyNumber) -> np.ndarray:
    """Union of the alpha grids of ``numbers``."""
    if not numbers:
        raise ValueError("merge_grids needs at least one fuzzy number")
    first = numbers[0].levels
    if all(u.levels is first or np.array_equal(u.levels, first) for u in numbers[1:]):
        return first
    return np.unique(np.concatenate([u.levels for u in numbers]))


def refine_to_grid(u: FuzzyNumber, levels) -> FuzzyNumber:
    """Resample ``u`` onto ``levels`` by linear interpolation of its endpoints.

    Lossless whenever ``levels`` contains ``u.levels``.
    """
    lv = np.asarray(levels, dtype=float)
    if lv.ndim != 1 or lv.size < 2 or lv[0] != 0.0 or lv[-1] != 1.0:
        raise InvalidFuzzyNumber("target grid must be 1-d and contain 0 and 1 as its ends")
    if np.any(np.diff(lv) <= 0):
        raise InvalidFuzzyNumber("target grid must be strictly increasing")
    if lv.shape == u.levels.shape and np.array_equal(lv, u.levels):
        return u
    lower = np.interp(lv, u.levels, u.lower)
    upper = np.interp(lv, u.levels, u.upper)
    # interpolation of monotone data is monotone; no projection needed
    return FuzzyNumber.unchecked(lv, lower, upper)


def _aligned(*numbers: FuzzyNumber) -> tuple[np.ndarray, list[FuzzyNumber]]:
    grid = merge_grids(*numbers)
    return grid, [refine_to_grid(u, grid) for u in numbers]


def add(u: FuzzyNumber, v: FuzzyNumber) -> FuzzyNumber:
    """Level-wise sum ``[u + v]_alpha = [u]_alpha + [v]_alpha``."""
    grid, (u, v) = _aligned(u, v)
    return FuzzyNumber(grid, u.lower + v.lower, u.upper + v.upper)


def scale(k: float, u: FuzzyNumber) -> FuzzyNumber:
    """Scalar multiple ``k u``; for ``k < 0`` the endpoints swap roles."""
    k = float(k)
    if not math.isfinite(k):
        raise ValueError(f"scalar must be finite, got {k!r}")
    if k >= 0:
        return FuzzyNumber(u.levels, k * u.lower, k * u.upper)
    return FuzzyNumber(u.levels, k * u.upper, k * u.lower)


def metric_d(u: FuzzyNumber, v: FuzzyNumber) -> float:
    """Supremum metric: ``sup_alpha max(|u-_a - v-_a|, |u+_a - v+_a|)``."""
    _, (u, v) = _aligned(u, v)
    return float(max(np.max(np.abs(u.lower - v.lower)), np.max(np.abs(u.upper - v.upper))))


def weighted_sum(weights: Sequence[float], us: Sequence[FuzzyNumber]) -> FuzzyNumber:
    """Endpoint-wise ``sum_i w_i u_i`` for nonnegative weights.

    Negative weights are rejected: distributivity ``(a + b) u = a u + b u``
    only holds for scalars of one sign, so the endpoint-wise formula would
    not equal the fuzzy sum of scalar multiples.
    """
    w = np.asarray(weights, dtype=float)
    if w.ndim != 1 or w.size != len(us):
        raise ValueError("weights and fuzzy numbers must have the same length")
    if w.size == 0:
        raise ValueError("weighted_sum needs at least one term")
    if np.any(w < 0) or not np.all(np.isfinite(w)):
        raise ValueError("weights must be finite and nonnegative")
    grid, aligned = _aligned(*us)
    lower = w @ np.stack([u.lower for u in aligned])
    upper = w @ np.stack([u.upper for u in aligned])
    return FuzzyNumber(grid, lower, upper)


@dataclass(frozen=True)
class FuzzySequence:
    """Finite prefix ``(u_0, u_1, ...)`` of a sequence of fuzzy numbers."""

    terms: tuple[FuzzyNumber, ...]

    def __post_init__(self) -> None:
        terms = tuple(self.terms)
        if not terms:
            raise ValueError("a fuzzy sequence needs at least one term")
        for i, t in enumerate(terms):
            if not isinstance(t, FuzzyNumber):
                raise TypeError(f"term {i} is {type(t).__name__}, not FuzzyNumber")
        object.__setattr__(self, "terms", terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[FuzzyNumber]:
        return iter(self.terms)

    @overload
    def __getitem__(self, i: int) -> FuzzyNumber: ...
    @overload
    def __getitem__(self, i: slice) -> "FuzzySequence": ...

    def __getitem__(self, i):
        if isinstance(i, slice):
            return FuzzySequence(self.terms[i])
        return self.terms[i]

    @property
    def grid(self) -> np.ndarray:
        return merge_grids(*self.terms)

    def endpoint_arrays(self, levels=None) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Stack all terms on a shared grid: ``(levels, lower[n, j], upper[n, j])``."""
        grid = self.grid if levels is None else np.asarray(levels, dtype=float)
        aligned = [refine_to_grid(u, grid) for u in self.terms]
        return (
            grid,
            np.stack([u.lower for u in aligned]),
            np.stack([u.upper for u in aligned]),
        )

    def map(self, f) -> "FuzzySequence":
        return FuzzySequence(tuple(f(u) for u in self.terms))


SequenceLike = Union[FuzzySequence, Iterable[FuzzyNumber]]


def as_sequence(seq: SequenceLike) -> FuzzySequence:
    if isinstance(seq, FuzzySequence):
        return seq
    return FuzzySequence(tuple(seq))
