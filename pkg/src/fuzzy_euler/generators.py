"""Sequence generators: the alternating triangular example and random families."""

from __future__ import annotations

from typing import Optional

import numpy as np

from .fuzzy import FuzzyNumber, FuzzySequence, add, crisp, scale, triangular

__all__ = [
    "alternating_harmonic_terms",
    "convergent_sequence",
    "example_closed_form",
    "example_limit",
    "generate_example",
    "random_fuzzy",
    "uniform_levels",
]


def uniform_levels(grid_size: int) -> np.ndarray:
    if grid_size < 2:
        raise ValueError("grid_size must be at least 2")
    return np.linspace(0.0, 1.0, int(grid_size))


def generate_example(upto: int, grid_size: int = 101) -> FuzzySequence:
    """``u_n`` with alpha-cut ``[(-1)^n + alpha, (-1)^n + 2 - alpha]``, ``n = 0..upto``.

    Triangular with peak ``(-1)^n + 1``; the sequence oscillates with
    ``D(u_n, u_{n+1}) = 2`` and so has no limit, although its Euler means
    converge.
    """
    if upto < 0:
        raise ValueError("upto must be nonnegative")
    lv = uniform_levels(grid_size)
    return FuzzySequence(
        tuple(triangular(s, s + 1.0, s + 2.0, lv) for s in ((-1.0) ** n for n in range(upto + 1)))
    )


def example_limit(grid_size: int = 101) -> FuzzyNumber:
    """The common limit of the example's Euler means: alpha-cut ``[alpha, 2 - alpha]``."""
    return triangular(0.0, 1.0, 2.0, uniform_levels(grid_size))


def example_closed_form(n: int, p: float) -> float:
    """``|p - 1|^n / (p + 1)^n``, the distance of ``t^p_n`` from the limit."""
    return (abs(p - 1.0) / (p + 1.0)) ** n


def random_fuzzy(
    rng: np.random.Generator,
    levels=None,
    center_scale: float = 5.0,
    width_scale: float = 2.0,
) -> FuzzyNumber:
    """A random piecewise-linear fuzzy number.

    Endpoints are cumulative sums of nonnegative increments, so the result
    is nested by construction; the core is a random (possibly degenerate)
    interval.
    """
    lv = np.linspace(0.0, 1.0, 11) if levels is None else np.asarray(levels, dtype=float)
    m = lv.size
    center = rng.normal(0.0, center_scale)
    core_half = abs(rng.normal(0.0, 0.5)) * rng.integers(0, 2)
    rise = rng.exponential(1.0, m - 1)
    fall = rng.exponential(1.0, m - 1)
    rise *= width_scale * rng.uniform(0.2, 1.0) / rise.sum()
    fall *= width_scale * rng.uniform(0.2, 1.0) / fall.sum()
    lower = center - core_half - np.concatenate([np.cumsum(rise[::-1])[::-1], [0.0]])
    upper = center + core_half + np.concatenate([np.cumsum(fall[::-1])[::-1], [0.0]])
    return FuzzyNumber(lv, lower, upper)


def convergent_sequence(
    rng: np.random.Generator,
    limit: FuzzyNumber,
    length: int,
    kind: str = "geometric",
    ratio: Optional[float] = None,
    power: float = 2.0,
    amplitude: float = 1.0,
) -> FuzzySequence:
    """``u_n = limit + c_n v_n`` with ``D(u_n, limit) = |c_n| D(v_n, 0) -> 0``.

    ``kind="geometric"``: ``c_n = a * ratio^n`` with a fresh random ``v_n``
    and random sign per term.  ``kind="power"``: ``c_n = a * (n + 1)^-power``
    with one fixed ``v``, giving a smoothly decaying gap statistic.
    """
    if length < 1:
        raise ValueError("length must be positive")
    terms = []
    if kind == "geometric":
        rho = rng.uniform(0.1, 0.5) if ratio is None else float(ratio)
        for n in range(length):
            v = random_fuzzy(rng, limit.levels, center_scale=1.0, width_scale=1.0)
            c = amplitude * rho**n * (1.0 if rng.random() < 0.5 else -1.0)
            terms.append(add(limit, scale(c, v)))
    elif kind == "power":
        v = random_fuzzy(rng, limit.levels, center_scale=1.0, width_scale=1.0)
        for n in range(length):
            terms.append(add(limit, scale(amplitude * (n + 1.0) ** -power, v)))
    elif kind == "crisp-power":
        for n in range(length):
            terms.append(add(limit, crisp(amplitude * (n + 1.0) ** -power, limit.levels)))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return FuzzySequence(tuple(terms))


def alternating_harmonic_terms(length: int, power: float = 1.0, levels=None) -> FuzzySequence:
    """Crisp series terms ``a_0 = 0``, ``a_n = (-1)^n / n^power``."""
    vals = [0.0] + [(-1.0) ** n / n**power for n in range(1, length)]
    return FuzzySequence(tuple(crisp(v, levels) for v in vals))
