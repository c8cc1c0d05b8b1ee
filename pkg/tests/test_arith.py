import math

import numpy as np
import pytest

from zerokit.dirichlet.arith import (
    harmonic_sum,
    int_nth_root,
    primes_in_window,
    primes_up_to,
    rough_mask,
    smoothed_harmonic_sum,
    von_mangoldt_sum,
)

EULER_GAMMA = 0.5772156649015329


class TestPrimes:
    def test_small(self):
        assert list(primes_up_to(20)) == [2, 3, 5, 7, 11, 13, 17, 19]

    def test_window_half_open(self):
        window = primes_in_window(10, 100)
        assert len(window) == 21
        assert window[0] == 11 and window[-1] == 97
        assert 101 not in primes_in_window(10, 101)
        assert 11 in primes_in_window(11, 12)

    def test_counts(self):
        assert len(primes_up_to(10**6)) == 78498

    def test_int_nth_root(self):
        assert int_nth_root(10**6, 2) == 1000
        assert int_nth_root(10**6 - 1, 2) == 999
        assert int_nth_root(2**40, 40) == 2


class TestVonMangoldt:
    def test_first_point(self):
        assert von_mangoldt_sum(2.0) == pytest.approx(math.log(2.0) / 2.0)

    def test_explicit_enumeration_to_ten(self):
        # independent oracle: explicit loop over prime powers <= 10
        expected = 0.0
        for p in (2, 3, 5, 7):
            pk = p
            while pk <= 10:
                expected += math.log(p) / pk
                pk *= p
        assert von_mangoldt_sum(10.0) == pytest.approx(expected, abs=1e-13)
        assert expected == pytest.approx(1.6947, abs=1e-4)

    def test_million_mertens_window(self):
        val = von_mangoldt_sum(1e6)
        assert math.log(1e6) - 2.0 <= val <= math.log(1e6)

    def test_linear_log_envelope(self):
        # sum stays under 1.1 log y across the desk range
        for y in (1e2, 1e3, 1e4, 1e5, 1e6, 1e7, 1e8):
            assert von_mangoldt_sum(y) <= 1.1 * math.log(y)

    def test_guard(self):
        with pytest.raises(ValueError):
            von_mangoldt_sum(2e8)


class TestSmoothedHarmonic:
    def test_empty_at_one(self):
        assert smoothed_harmonic_sum(1.0) == 0.0

    def test_two_terms(self):
        assert smoothed_harmonic_sum(2.0, 1) == pytest.approx(0.5)

    def test_main_term(self):
        x = 1e5
        main = math.log(x) - 1.0 + EULER_GAMMA
        assert smoothed_harmonic_sum(x, 1) == pytest.approx(main, abs=1e-2)

    def test_fluctuation_scale(self):
        # |sum - main| <= C' x^(-1/2); C' is recorded in the budget fixture
        from zerokit.verify import load_budgets

        worst = 0.0
        for x in (1e3, 1e4, 1e5, 1e6, 1e7):
            main = math.log(x) - 1.0 + EULER_GAMMA
            dev = abs(smoothed_harmonic_sum(x, 1) - main) * math.sqrt(x)
            worst = max(worst, dev)
        assert worst <= load_budgets()["harmonic_main_C"]

    def test_higher_degree_smaller(self):
        assert smoothed_harmonic_sum(100.0, 3) < smoothed_harmonic_sum(100.0, 1)


class TestHarmonicAndRough:
    def test_harmonic_values(self):
        assert harmonic_sum(10.0) == pytest.approx(sum(1.0 / n for n in range(1, 11)))
        assert harmonic_sum(0.5) == 0.0

    def test_harmonic_lower_envelope(self):
        for z in (1e3, 1e4, 1e5):
            assert harmonic_sum(z) >= 0.9 * math.log(z)

    def test_rough_mask(self):
        n = np.arange(1, 50)
        mask = rough_mask(n, 7.0)
        rough = set(n[mask].tolist())
        assert 1 in rough
        assert {11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}.issubset(rough)
        assert all(v % 2 and v % 3 and v % 5 and v % 7 for v in rough)
