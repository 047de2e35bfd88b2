"""Acceptance suite: one test per criterion, each at its stated tolerance.

Every test records a ``criterion N: PASS|FAIL`` line that is printed in the
pytest terminal summary.  Running this file directly prints the same lines.
"""

import math
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np

from fuzzy_euler import (
    add,
    binomial_cdf_rational,
    ceiling_composition,
    classify_rate,
    detect_limit,
    euler_transform,
    euler_weights,
    metric_d,
    proof_limit_terms,
    scale,
    sequence_gap,
    triangular,
    verify_bounds,
    zero,
)
from fuzzy_euler.binomial import _cdf_vector
from fuzzy_euler.experiments import default_p_grid
from fuzzy_euler.generators import (
    convergent_sequence,
    example_limit,
    generate_example,
    random_fuzzy,
)

from conftest import ACCEPTANCE_LINES

SEED = 20240601


@contextmanager
def criterion(number, title, budget=None):
    """Time the block and record a pass/fail line for it."""
    start = time.perf_counter()
    info = {}
    try:
        yield info
    except BaseException:
        line = f"criterion {number}: FAIL  {title}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        raise
    elapsed = time.perf_counter() - start
    detail = ", ".join(f"{k}={v}" for k, v in info.items())
    ok = budget is None or elapsed < budget
    status = "PASS" if ok else "FAIL"
    line = f"criterion {number}: {status}  {title} ({detail}{', ' if detail else ''}{elapsed:.2f}s)"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, f"runtime {elapsed:.2f}s exceeds {budget}s"


def _mag(*numbers):
    return max(1.0, *(float(np.max(np.abs(np.concatenate([u.lower, u.upper])))) for u in numbers))


def test_criterion_1_example_reproduction():
    with criterion(1, "example reproduction, p=2, n<=40", budget=1.0) as info:
        seq, mu = generate_example(40), example_limit()
        means = euler_transform(seq, 40, 2.0)
        worst = max(abs(metric_d(t, mu) - 3.0**-n) for n, t in enumerate(means))
        info["max_dev"] = f"{worst:.1e}"
        assert worst <= 1e-12


def test_criterion_2_raw_example_diverges():
    with criterion(2, "raw example has no limit, its E_2 means do", budget=1.0) as info:
        seq = generate_example(99)
        assert len(seq) == 100
        assert detect_limit(seq, tol=1e-6, window=5) is None
        lim = detect_limit(euler_transform(seq, 99, 2.0), tol=1e-6, window=5)
        assert lim is not None
        d = metric_d(lim, example_limit())
        info["D_to_mu"] = f"{d:.1e}"
        assert d <= 1e-6


def test_criterion_3_ceiling_composition():
    rng = np.random.default_rng(SEED)
    with criterion(3, "E_r(E_p) = E_ceil(p), upto=20", budget=5.0) as info:
        inputs = [generate_example(20)] + [
            [random_fuzzy(rng) for _ in range(21)] for _ in range(3)
        ]
        worst = 0.0
        for p in (0.5, 1.5, 2.7):
            for seq in inputs:
                composed, direct = ceiling_composition(seq, 20, p)
                worst = max(worst, max(metric_d(a, b) for a, b in zip(composed, direct)))
        info["max_dev"] = f"{worst:.1e}"
        assert worst <= 1e-10


def _rational_cdf_row(n, p):
    """Exact ``P{X <= k}`` for ``k = 0..n`` with integer arithmetic, ``p = a/b``."""
    a, b = p.numerator, p.denominator
    terms = [math.comb(n, i) * a**i * (b - a) ** (n - i) for i in range(n + 1)]
    denom = b**n
    out, acc = [], 0
    for t in terms:
        acc += t
        out.append(Fraction(acc, denom))
    return out


def test_criterion_4_binomial_bounds():
    with criterion(4, "binomial CDF bounds, n<=200, 20 p values", budget=30.0) as info:
        # the floating oracle against exact rational computation
        worst_oracle = 0.0
        for p in (Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)):
            for n in range(1, 65):
                exact = _rational_cdf_row(n, p)
                approx = _cdf_vector(n, float(p))
                for k in range(n + 1):
                    err = abs(approx[k] - float(exact[k]))
                    worst_oracle = max(worst_oracle, err)
                    assert err <= 1e-15 + 1e-13 * float(exact[k])
            assert binomial_cdf_rational(64, p, 20) == _rational_cdf_row(64, p)[20]
        records = failures = 0
        for n in range(1, 201):
            for p in default_p_grid(20):
                for rec in verify_bounds(n, p, slack=1e-12):
                    records += 1
                    failures += not rec.passed
        info["records"] = records
        info["failures"] = failures
        info["oracle_err"] = f"{worst_oracle:.1e}"
        assert records == 20 * sum(range(1, 201))
        assert failures == 0


def test_criterion_5_proof_limits():
    with criterion(5, "L_n, R_n limits and 1/n decay", budget=1.0) as info:
        ns = [10**3, 10**4, 10**5, 10**6]
        worst = 0.0
        for q in (1, 2, 3):
            l_lim, r_lim = (q + 1) / (2 * q), q / (2 * (q + 1))
            errs = np.array([[abs(a - l_lim), abs(b - r_lim)] for a, b in map(lambda n: proof_limit_terms(n, q), ns)])
            worst = max(worst, errs[-1].max())
            assert errs[-1, 0] <= 1e-4 and errs[-1, 1] <= 1e-4
            for col in errs.T:
                # shrinks at least in proportion to 1/n: every decade cuts the error tenfold or more
                assert np.all(col[1:] <= col[:-1] * 0.1 * 1.05)
                scaled = np.array(ns) * col
                assert scaled.max() <= 1.05 * scaled[0]
        info["max_err_1e6"] = f"{worst:.1e}"


def test_criterion_6_regularity():
    rng = np.random.default_rng(SEED)
    with criterion(6, "regularity on 100 random convergent sequences") as info:
        worst = 0.0
        for _ in range(100):
            mu = random_fuzzy(rng)
            seq = convergent_sequence(rng, mu, 61, kind="geometric")
            for p in (1.0, 2.0):
                t60 = euler_transform(seq, 60, p)[60]
                worst = max(worst, metric_d(t60, mu))
        info["max_D"] = f"{worst:.1e}"
        assert worst < 1e-3


def test_criterion_7_metric_and_algebra():
    rng = np.random.default_rng(SEED)
    grids = [np.linspace(0, 1, 11), np.linspace(0, 1, 6), np.array([0, 0.3, 0.7, 1.0])]
    tol = 1e-12
    with criterion(7, "metric and algebra properties, 1000 instances") as info:
        worst = 0.0

        def close(x, y, *operands):
            nonlocal worst
            rel = metric_d(x, y) / _mag(x, y, *operands)
            worst = max(worst, rel)
            assert rel <= tol

        for _ in range(1000):
            u, v, w, z = (random_fuzzy(rng, grids[rng.integers(3)]) for _ in range(4))
            k, a, b = rng.uniform(-20, 20, 3)
            m = _mag(u, v, w, z)
            # metric facts: homogeneity, translation invariance, triangle, bound chain
            assert abs(metric_d(scale(k, u), scale(k, v)) - abs(k) * metric_d(u, v)) <= tol * abs(k) * m
            assert abs(metric_d(add(u, v), add(w, v)) - metric_d(u, w)) <= tol * m
            assert metric_d(add(u, v), add(w, z)) <= metric_d(u, w) + metric_d(v, z) + tol * m
            du, dv, duv = metric_d(u, zero()), metric_d(v, zero()), metric_d(u, v)
            assert abs(du - dv) <= duv + tol * m and duv <= du + dv + tol * m
            # algebra: neutral zero, same-sign distributivity, distributivity, associativity
            assert metric_d(add(u, zero()), u) == 0.0 and metric_d(add(zero(), u), u) == 0.0
            sa, sb = abs(a), abs(b)
            close(scale(sa + sb, u), add(scale(sa, u), scale(sb, u)), u)
            close(scale(-sa - sb, u), add(scale(-sa, u), scale(-sb, u)), u)
            close(scale(k, add(u, v)), add(scale(k, u), scale(k, v)), u, v)
            close(scale(a, scale(b, u)), scale(a * b, u), u)
            # interchange of the double sum for nonnegative weights
            n = int(rng.integers(1, 9))
            x = rng.uniform(0, 3, n + 1)
            us = [random_fuzzy(rng) for _ in range(n + 1)]
            lhs = zero(us[0].levels)
            prefix = zero(us[0].levels)
            for kk in range(n + 1):
                prefix = add(prefix, us[kk])
                lhs = add(lhs, scale(x[kk], prefix))
            rhs = zero(us[0].levels)
            for mm in range(n + 1):
                rhs = add(rhs, scale(x[mm:].sum(), us[mm]))
            close(lhs, rhs, *us)
        witness = triangular(0.0, 1.0, 2.0)
        gap = metric_d(scale(0.0, witness), add(scale(1.0, witness), scale(-1.0, witness)))
        info["max_rel_err"] = f"{worst:.1e}"
        info["mixed_sign_gap"] = gap
        assert gap > 0.5


def test_criterion_8_tauberian_pipeline():
    rng = np.random.default_rng(SEED)
    with criterion(8, "gap diagnostics and limit detection on 20 sequences") as info:
        worst = 0.0
        cases = [("geometric", 200)] * 10 + [("power", 400)] * 10
        for kind, length in cases:
            mu = random_fuzzy(rng)
            seq = convergent_sequence(rng, mu, length, kind=kind, power=2.0)
            assert classify_rate(sequence_gap(seq)).classification == "vanishing"
            # E_p summable to mu: the means approach it, at a rate set by the perturbation
            for p in (1.0, 2.0):
                means = euler_transform(seq, length - 1, p)
                d_half, d_end = metric_d(means[length // 2], mu), metric_d(means[-1], mu)
                assert d_end <= 1e-3 and d_end <= max(d_half, 1e-12)
            lim = detect_limit(seq, tol=1e-6, window=10)
            assert lim is not None
            worst = max(worst, metric_d(lim, mu))
            assert metric_d(lim, mu) <= 1e-4
        verdict = classify_rate(sequence_gap(generate_example(99)))
        info["max_D"] = f"{worst:.1e}"
        info["example"] = verdict.classification
        assert verdict.classification == "unbounded"


def test_criterion_9_weight_normalisation():
    with criterion(9, "Euler weights sum to one, n<=1e4") as info:
        worst = 0.0
        for p in (0.3, 1.0, 2.0, 5.7):
            for n in list(range(0, 201)) + [500, 1000, 2000, 5000, 10_000]:
                worst = max(worst, abs(math.fsum(euler_weights(n, p).w) - 1.0))
        info["max_dev"] = f"{worst:.1e}"
        assert worst <= 1e-12


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
