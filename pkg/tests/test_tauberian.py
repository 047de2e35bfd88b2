import math

import numpy as np
import pytest

from fuzzy_euler import (
    FuzzySequence,
    GapSeries,
    add,
    classify_rate,
    crisp,
    detect_limit,
    knopp_gap,
    euler_transform,
    metric_d,
    partial_sums,
    scale,
    sequence_gap,
    series_gap,
    zero,
)
from fuzzy_euler.generators import (
    alternating_harmonic_terms,
    convergent_sequence,
    generate_example,
    random_fuzzy,
)


class TestSequenceGap:
    def test_constant(self, unit_triangle):
        g = sequence_gap([unit_triangle] * 10)
        assert np.all(g.values == 0)
        assert g.start == 1 and g.indices[0] == 1

    def test_example(self):
        g = sequence_gap(generate_example(30))
        np.testing.assert_allclose(g.values, 2 * np.sqrt(np.arange(1, 31)), rtol=1e-14)

    def test_crisp_partial_sums_from_one(self):
        # u_n = sum_{k=1}^{n} k^-1.5 (u_0 = 0), so g_n = sqrt(n) n^-1.5 = 1/n
        u = np.concatenate([[0.0], np.cumsum(np.arange(1, 300) ** -1.5)])
        g = sequence_gap([crisp(v, [0, 1]) for v in u])
        np.testing.assert_allclose(g.values, 1.0 / np.arange(1, 300), rtol=1e-12, atol=1e-13)
        assert classify_rate(g).classification == "vanishing"

    def test_power_partial_sums(self):
        n = np.arange(1, 200)
        s = np.concatenate([[1.0], 1.0 + np.cumsum(1.0 / (n + 1) ** 1.5)])
        # u_n = sum_{k<=n} 1/(k+1)^1.5 so D(u_{n-1}, u_n) = 1/(n+1)^1.5
        g = sequence_gap([crisp(v, [0, 1]) for v in s])
        np.testing.assert_allclose(g.values, np.sqrt(n) / (n + 1) ** 1.5, rtol=1e-9)
        assert classify_rate(g).classification == "vanishing"

    def test_too_short(self, unit_triangle):
        with pytest.raises(ValueError):
            sequence_gap([unit_triangle])

    def test_translation_invariant(self, rng):
        seq = [random_fuzzy(rng) for _ in range(12)]
        v = random_fuzzy(rng)
        g1 = sequence_gap(seq).values
        g2 = sequence_gap([add(u, v) for u in seq]).values
        np.testing.assert_allclose(g2, g1, atol=1e-12)

    @pytest.mark.parametrize("k", [-2.5, 0.0, 0.3, 4.0])
    def test_scaling(self, rng, k):
        seq = [random_fuzzy(rng) for _ in range(12)]
        g1 = sequence_gap(seq).values
        g2 = sequence_gap([scale(k, u) for u in seq]).values
        np.testing.assert_allclose(g2, abs(k) * g1, rtol=1e-12, atol=1e-12)


class TestSeriesGap:
    def test_zero_terms(self):
        assert np.all(series_gap([zero()] * 5).values == 0)

    def test_alternating_harmonic(self):
        g = series_gap(alternating_harmonic_terms(400))
        n = np.arange(1, 400)
        np.testing.assert_allclose(g.values[1:], 1 / np.sqrt(n), rtol=1e-14)
        assert classify_rate(g).classification == "vanishing"

    def test_inverse_sqrt_is_bounded_not_vanishing(self):
        terms = [crisp(0.0)] + [crisp(1 / math.sqrt(n)) for n in range(1, 400)]
        g = series_gap(terms)
        np.testing.assert_allclose(g.values[1:], 1.0, rtol=1e-14)
        assert classify_rate(g).classification == "bounded"

    def test_indices_start_at_zero(self):
        assert series_gap([crisp(1.0)] * 3).indices.tolist() == [0, 1, 2]


class TestKnoppGap:
    def test_matches_series_gap_on_crisp_terms(self):
        a = [0.0] + [(-1.0) ** n / n for n in range(1, 300)]
        g = knopp_gap(a)
        np.testing.assert_array_equal(g.values, series_gap([crisp(x, [0, 1]) for x in a]).values)
        assert classify_rate(g).classification == "vanishing"

    def test_grandi(self):
        assert classify_rate(knopp_gap([(-1.0) ** n for n in range(100)])).classification == "unbounded"

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            knopp_gap([])


class TestClassifyRate:
    def test_all_zero(self):
        v = classify_rate(GapSeries(np.zeros(20)))
        assert v.classification == "vanishing" and v.tail_sup == 0

    def test_sqrt_growth(self):
        n = np.arange(1, 201)
        v = classify_rate(GapSeries(2 * np.sqrt(n)))
        assert v.classification == "unbounded"
        assert v.slope_estimate == pytest.approx(0.5, abs=1e-12)

    def test_bounded(self):
        n = np.arange(1, 201)
        v = classify_rate(GapSeries(1 + 1 / n))
        assert v.classification == "bounded"
        assert abs(v.slope_estimate) < 0.01
        assert v.tail_sup == pytest.approx(1 + 1 / 151)

    def test_oscillating_is_inconclusive(self):
        n = np.arange(1, 201)
        # slow oscillation whose log-log tail slope is large but whose tail sup
        # does not exceed the head sup
        g = 1.0 + 0.9 * np.sin(n / 12.0)
        assert classify_rate(GapSeries(g)).classification == "inconclusive"

    def test_tail_fraction_validation(self):
        with pytest.raises(ValueError):
            classify_rate(GapSeries(np.ones(20)), tail_fraction=1.0)

    def test_too_short(self):
        with pytest.raises(ValueError):
            classify_rate(GapSeries(np.ones(7)))

    def test_gap_series_validation(self):
        with pytest.raises(ValueError):
            GapSeries(np.array([1.0, -1.0]))
        with pytest.raises(ValueError):
            GapSeries(np.array([1.0, math.inf]))


class TestPipelines:
    @pytest.mark.parametrize("kind", ["geometric", "power"])
    def test_tauberian(self, rng, kind):
        mu = random_fuzzy(rng)
        seq = convergent_sequence(rng, mu, 300, kind=kind, ratio=0.6, power=2.0)
        verdict = classify_rate(sequence_gap(seq))
        assert verdict.classification == "vanishing"
        means = euler_transform(seq, 299, 1.5)
        assert metric_d(means[-1], mu) < 1e-4
        lim = detect_limit(seq, tol=1e-6, window=10)
        assert lim is not None and metric_d(lim, mu) < 1e-4

    def test_bounded_gap_sequence_stays_bounded(self, rng):
        mu = random_fuzzy(rng)
        terms = [add(mu, crisp((-1.0) ** n / math.sqrt(n + 1), mu.levels)) for n in range(800)]
        verdict = classify_rate(sequence_gap(terms))
        assert verdict.classification == "bounded"
        norms = [metric_d(u, zero(u.levels)) for u in terms]
        assert max(norms[:400]) == max(norms)

    def test_example_unbounded(self):
        assert classify_rate(sequence_gap(generate_example(100))).classification == "unbounded"

    def test_knopp_real_series(self):
        # a_n = (-1)^n/n: Knopp's condition holds and E_1 sum equals the ordinary sum -ln 2
        terms = alternating_harmonic_terms(300)
        assert classify_rate(series_gap(terms)).classification == "vanishing"
        sums = partial_sums(terms)
        means = euler_transform(sums, 299, 1.0)
        assert means[-1].lower[0] == pytest.approx(-math.log(2), abs=1e-12)
        assert sums[-1].lower[0] == pytest.approx(-math.log(2), abs=2e-3)

    def test_divergent_series_fails_condition(self):
        # Grandi's series is E_1 summable to 1/2 but the terms do not satisfy the condition
        terms = FuzzySequence(tuple(crisp((-1.0) ** n) for n in range(100)))
        assert classify_rate(series_gap(terms)).classification == "unbounded"
        means = euler_transform(partial_sums(terms), 99, 1.0)
        assert means[-1].lower[0] == pytest.approx(0.5, abs=1e-15)
