"""Batch experiments and their CSV reports.

Each ``run_*`` function takes an :class:`ExperimentConfig` and returns a
:class:`Report`: a header, rows, a summary mapping, and a ``passed`` flag
that is False as soon as any enabled check misses its tolerance.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Callable, Optional

import numpy as np

from . import binomial
from .euler import EulerParams, ceiling_composition, detect_limit, euler_transform
from .fuzzy import FuzzySequence, metric_d
from .generators import example_closed_form, example_limit, generate_example
from .io import load_sequence
from .tauberian import classify_rate, sequence_gap, series_gap

__all__ = [
    "COMMANDS",
    "DEFAULT_TOLERANCES",
    "ConfigError",
    "ExperimentConfig",
    "Report",
    "reproduce_example",
    "run",
    "run_bounds",
    "run_compose_check",
    "run_diagnose",
    "run_limits_check",
    "run_reproduce_example",
    "run_transform",
    "write_report",
]

DEFAULT_TOLERANCES = {
    "example": 1e-12,
    "compose": 1e-10,
    "bound_slack": 1e-12,
    "limits": 1e-4,
    "detect": 1e-8,
    "tail_fraction": 0.25,
}

# per-command defaults for p and upto
_DEFAULT_P = {"transform": 2.0, "compose-check": 1.5, "reproduce-example": 2.0}
_DEFAULT_UPTO = {
    "transform": 40,
    "diagnose": 40,
    "bounds": 200,
    "compose-check": 20,
    "reproduce-example": 40,
    "limits-check": 10**6,
}


class ConfigError(ValueError):
    """Out-of-range or inconsistent experiment parameters."""


@dataclass
class ExperimentConfig:
    command: str
    p: Optional[float] = None
    upto: Optional[int] = None
    grid_size: int = 101
    tolerances: dict[str, float] = field(default_factory=dict)
    input_path: Optional[str] = None
    output_path: Optional[str] = None
    p_grid: Optional[list[float]] = None
    q_values: list[int] = field(default_factory=lambda: [1, 2, 3])
    series: bool = False
    expect: Optional[str] = None

    @classmethod
    def from_mapping(cls, data: dict[str, Any]) -> "ExperimentConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        if "command" not in data:
            raise ConfigError("config lacks 'command'")
        return cls(**data)

    def tol(self, name: str) -> float:
        return float(self.tolerances.get(name, DEFAULT_TOLERANCES[name]))

    def resolved_p(self) -> float:
        return float(self.p if self.p is not None else _DEFAULT_P.get(self.command, 1.0))

    def resolved_upto(self) -> int:
        return int(self.upto if self.upto is not None else _DEFAULT_UPTO[self.command])

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.p is not None and not (math.isfinite(self.p) and self.p >= 0):
            raise ConfigError(f"p must be finite and >= 0, got {self.p}")
        if self.upto is not None and self.upto < 0:
            raise ConfigError(f"upto must be >= 0, got {self.upto}")
        if self.grid_size < 2:
            raise ConfigError(f"grid_size must be >= 2, got {self.grid_size}")
        for name in self.tolerances:
            if name not in DEFAULT_TOLERANCES:
                raise ConfigError(f"unknown tolerance {name!r}")
        if self.expect is not None and self.expect not in (
            "vanishing", "bounded", "unbounded", "inconclusive"
        ):
            raise ConfigError(f"unknown expected classification {self.expect!r}")


@dataclass
class Report:
    columns: tuple[str, ...]
    rows: list[tuple]
    summary: dict[str, Any]
    passed: bool = True

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([_fmt(v) for v in row])
        return buf.getvalue()

    def summary_json(self) -> str:
        doc = dict(self.summary)
        doc["passed"] = self.passed
        return json.dumps(_jsonable(doc), indent=2, sort_keys=True) + "\n"


def _fmt(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    return str(v)


def _jsonable(v: Any) -> Any:
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (np.floating, float)):
        f = float(v)
        return f if math.isfinite(f) else repr(f)
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, np.bool_):
        return bool(v)
    return v


def write_report(report: Report, out_path: Optional[str]) -> None:
    """Write the CSV to ``out_path`` and the summary beside it.

    The summary goes to ``<out_path>.summary.json``.  Without a path
    nothing is written; the CLI prints to stdout instead.
    """
    if out_path is None:
        return
    out = Path(out_path)
    out.write_text(report.to_csv())
    Path(str(out) + ".summary.json").write_text(report.summary_json())


def _input_sequence(config: ExperimentConfig, upto: int) -> tuple[FuzzySequence, bool]:
    """The configured input, or the alternating example when none is given."""
    if config.input_path is None:
        return generate_example(upto, config.grid_size), True
    seq = load_sequence(config.input_path)
    return seq, False


def reproduce_example(p: float, upto: int, grid_size: int = 101, tol: float = 1e-12) -> Report:
    """Measured ``D(t^p_n, mu)`` for the example against ``|p-1|^n/(p+1)^n``."""
    if not (math.isfinite(p) and p > 0):
        raise ConfigError(f"p must be positive, got {p}")
    seq = generate_example(upto, grid_size)
    mu = example_limit(grid_size)
    means = euler_transform(seq, upto, p)
    rows = []
    for n, t in enumerate(means):
        measured = metric_d(t, mu)
        closed = example_closed_form(n, p)
        rows.append((n, measured, closed, abs(measured - closed)))
    max_dev = max(r[3] for r in rows)
    return Report(
        ("n", "measured", "closed_form", "deviation"),
        rows,
        {"command": "reproduce-example", "p": p, "upto": upto, "max_deviation": max_dev, "tol": tol},
        passed=max_dev <= tol,
    )


def run_reproduce_example(config: ExperimentConfig) -> Report:
    return reproduce_example(
        config.resolved_p(), config.resolved_upto(), config.grid_size, config.tol("example")
    )


def run_transform(config: ExperimentConfig) -> Report:
    """Euler means of the input with distance to a reference and the raw gap.

    The reference is the detected limit of the means when the trailing
    window passes the Cauchy test, else the last mean.  For the built-in
    example the closed-form distance is reported and checked as well.
    """
    p = config.resolved_p()
    seq, is_example = _input_sequence(config, config.resolved_upto())
    upto = config.resolved_upto() if is_example else min(config.resolved_upto(), len(seq) - 1)
    means = euler_transform(seq, upto, p)
    window = min(10, len(means))
    limit = detect_limit(means, config.tol("detect"), window) if window >= 2 else None
    reference = limit if limit is not None else means[-1]
    if is_example:
        reference = example_limit(config.grid_size)
    raw_gap = sequence_gap(seq[: upto + 1]).values if upto >= 1 else np.array([])
    rows = []
    max_dev = 0.0
    for n, t in enumerate(means):
        d = metric_d(t, reference)
        g = float(raw_gap[n - 1]) if n >= 1 else None
        closed = example_closed_form(n, p) if is_example else None
        if closed is not None:
            max_dev = max(max_dev, abs(d - closed))
        rows.append((n, d, g, closed))
    summary = {
        "command": "transform",
        "p": p,
        "upto": upto,
        "input": config.input_path or "example",
        "reference": "example-limit" if is_example else ("detected" if limit is not None else "last-term"),
        "limit_detected": limit is not None,
    }
    passed = True
    if is_example:
        summary["max_closed_form_deviation"] = max_dev
        passed = max_dev <= config.tol("example")
    return Report(("n", "distance", "gap", "closed_form"), rows, summary, passed)


def run_diagnose(config: ExperimentConfig) -> Report:
    seq, _ = _input_sequence(config, config.resolved_upto())
    gap = series_gap(seq) if config.series else sequence_gap(seq)
    verdict = classify_rate(gap, config.tol("tail_fraction"))
    rows = [(int(n), float(g)) for n, g in zip(gap.indices, gap.values)]
    summary = {
        "command": "diagnose",
        "statistic": "series" if config.series else "sequence",
        "input": config.input_path or "example",
        **verdict.as_dict(),
    }
    passed = config.expect is None or verdict.classification == config.expect
    if config.expect is not None:
        summary["expected"] = config.expect
    return Report(("n", "g_n"), rows, summary, passed)


def default_p_grid(count: int = 20) -> list[float]:
    return [j / (count + 1) for j in range(1, count + 1)]


def run_bounds(config: ExperimentConfig) -> Report:
    nmax = config.resolved_upto()
    if nmax < 1:
        raise ConfigError("bounds needs upto >= 1")
    grid = config.p_grid if config.p_grid is not None else default_p_grid()
    for p in grid:
        if not 0 < p < 1:
            raise ConfigError(f"p values for bounds must lie in (0, 1), got {p}")
    slack = config.tol("bound_slack")
    rows = []
    failures = tight_ends = tight_inner = 0
    for n in range(1, nmax + 1):
        for p in grid:
            for rec in binomial.verify_bounds(n, p, slack):
                rows.append((rec.n, rec.p, rec.k, rec.lower, rec.exact, rec.upper, rec.passed))
                failures += not rec.passed
                if rec.tight:
                    if rec.k in (0, n - 1):
                        tight_ends += 1
                    else:
                        tight_inner += 1
    summary = {
        "command": "bounds",
        "n_max": nmax,
        "p_grid": list(grid),
        "slack": slack,
        "records": len(rows),
        "failures": failures,
        "tight_endpoint_records": tight_ends,
        "tight_interior_records": tight_inner,
    }
    return Report(("n", "p", "k", "lower", "exact", "upper", "pass"), rows, summary, failures == 0)


def run_compose_check(config: ExperimentConfig) -> Report:
    p = config.resolved_p()
    if p <= 0:
        raise ConfigError("compose-check needs p > 0")
    seq, is_example = _input_sequence(config, config.resolved_upto())
    upto = config.resolved_upto() if is_example else min(config.resolved_upto(), len(seq) - 1)
    params = EulerParams(p)
    composed, direct = ceiling_composition(seq, upto, params)
    rows = [(n, metric_d(a, b)) for n, (a, b) in enumerate(zip(composed, direct))]
    worst = max(d for _, d in rows)
    tol = config.tol("compose")
    summary = {
        "command": "compose-check",
        "p": p,
        "q": params.q,
        "r": params.r,
        "upto": upto,
        "input": config.input_path or "example",
        "max_deviation": worst,
        "tol": tol,
    }
    return Report(("n", "deviation"), rows, summary, worst <= tol)


def _first_order_decay(ns: list[int], errs: list[float]) -> tuple[bool, float, float]:
    """Whether ``errs`` behaves like ``O(1/n)`` over ``ns``.

    Returns ``(ok, slope, C)`` with ``C = max n * err``.  ``ok`` needs the
    errors to decrease, the log-log slope to be at most -0.9, and ``n * err``
    never to exceed its value at the smallest ``n`` by more than 5%.
    """
    scaled = [n * e for n, e in zip(ns, errs)]
    c_fit = max(scaled)
    if len(ns) < 2:
        return True, float("nan"), c_fit
    slope = float(np.polyfit(np.log(ns), np.log(errs), 1)[0])
    decreasing = all(b < a for a, b in zip(errs, errs[1:]))
    ok = decreasing and slope <= -0.9 and c_fit <= 1.05 * scaled[0]
    return ok, slope, c_fit


def run_limits_check(config: ExperimentConfig) -> Report:
    """``(L_n, R_n)`` against their limits over decades up to ``upto``.

    Passes when the error at the largest ``n`` is within tolerance and
    both error sequences decay at least like ``1/n`` across the decades.
    """
    nmax = config.resolved_upto()
    if nmax < 10:
        raise ConfigError("limits-check needs upto >= 10")
    ns = sorted({10**e for e in range(1, int(math.log10(nmax)) + 1)} | {nmax})
    ns = [n for n in ns if n >= min(10**3, nmax)]
    tol = config.tol("limits")
    rows = []
    passed = True
    decay = {}
    for q in config.q_values:
        if q < 1:
            raise ConfigError(f"q must be a positive integer, got {q}")
        l_lim = (q + 1) / (2 * q)
        r_lim = q / (2 * (q + 1))
        errs_l, errs_r = [], []
        for n in ns:
            left, right = binomial.proof_limit_terms(n, q)
            el, er = abs(left - l_lim), abs(right - r_lim)
            errs_l.append(el)
            errs_r.append(er)
            rows.append((q, n, left, l_lim, el, right, r_lim, er))
        ok_l, slope_l, c_l = _first_order_decay(ns, errs_l)
        ok_r, slope_r, c_r = _first_order_decay(ns, errs_r)
        decay[str(q)] = {"L_slope": slope_l, "L_C": c_l, "R_slope": slope_r, "R_C": c_r}
        passed &= errs_l[-1] <= tol and errs_r[-1] <= tol and ok_l and ok_r
    summary = {"command": "limits-check", "n_values": ns, "q_values": list(config.q_values),
               "tol": tol, "error_decay": decay}
    return Report(
        ("q", "n", "L_n", "L_limit", "L_error", "R_n", "R_limit", "R_error"), rows, summary, passed
    )


COMMANDS: dict[str, Callable[[ExperimentConfig], Report]] = {
    "transform": run_transform,
    "diagnose": run_diagnose,
    "bounds": run_bounds,
    "compose-check": run_compose_check,
    "reproduce-example": run_reproduce_example,
    "limits-check": run_limits_check,
}


def run(config: ExperimentConfig) -> Report:
    config.validate()
    return COMMANDS[config.command](config)
