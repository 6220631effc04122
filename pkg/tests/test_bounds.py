"""Entropy baseline, the two optimized bounds, and their reduction properties."""

import math
import random
from fractions import Fraction

import pytest

from conftest import random_code
from tgv import (
    Code,
    InputError,
    bound_report,
    BoundMethod,
    carowei_bound,
    distance_enumerator,
    entropy,
    gv_asymptotic,
    main_bound,
    optimize_x_carowei,
    optimize_x_main,
    x_delta,
)


class TestEntropy:
    def test_boundary_conventions(self):
        assert entropy(2, 0) == 0.0
        assert entropy(2, 1) == 0.0
        assert entropy(3, 1) == pytest.approx(math.log(2) / math.log(3), abs=1e-15)

    def test_binary_maximum(self):
        assert entropy(2, 0.5) == pytest.approx(1.0, abs=1e-15)

    def test_known_value(self):
        assert entropy(2, 0.1) == pytest.approx(0.4689956, abs=1e-6)

    def test_domain(self):
        with pytest.raises(InputError):
            entropy(2, -0.1)
        with pytest.raises(InputError):
            entropy(2, 1.1)


class TestGvAsymptotic:
    def test_plotkin_region_is_zero(self):
        assert gv_asymptotic(2, 0.5) == 0.0
        assert gv_asymptotic(2, 0.8) == 0.0
        assert gv_asymptotic(3, 2 / 3) == 0.0

    def test_zero_distance(self):
        assert gv_asymptotic(2, 0) == 1.0

    def test_known_value(self):
        assert gv_asymptotic(2, 0.1) == pytest.approx(0.5310044, abs=1e-6)

    def test_continuous_at_junction(self):
        assert gv_asymptotic(2, 0.5 - 1e-9) == pytest.approx(0.0, abs=1e-7)


class TestMainBound:
    def test_single_letter_code_reduces_to_gv(self):
        for q in (2, 3, 4):
            code = Code.full(q, 1)
            for i in range(1, 10):
                delta = 0.05 * i  # 0.05 .. 0.45, inside (0, 1-1/q) for every q here
                value = main_bound(code, delta, x_delta(q, delta))
                assert value == pytest.approx(gv_asymptotic(q, delta), abs=1e-12)

    def test_x_one_gives_zero(self, two_code):
        assert main_bound(two_code, 0.3, 1) == pytest.approx(0.0, abs=1e-15)

    def test_seven_word_code_against_direct_pair_sum(self, seven_code):
        # Independent route: average x^d over all ordered codeword pairs.
        delta, x = 0.2, 0.25
        acc = 0.0
        for a in seven_code.words:
            for b in seven_code.words:
                acc += x ** sum(s != t for s, t in zip(a, b))
        bx = acc / seven_code.size
        expected = math.log2(seven_code.size / bx) / 3 + delta * math.log2(x)
        assert main_bound(seven_code, delta, x) == pytest.approx(expected, abs=1e-12)

    def test_domain(self, two_code):
        with pytest.raises(InputError):
            main_bound(two_code, 0.2, 0)
        with pytest.raises(InputError):
            main_bound(two_code, 0.2, 1.5)
        with pytest.raises(InputError):
            main_bound(two_code, 0, 0.5)


class TestOptimizeMain:
    def test_single_letter_optimizer_hits_x_delta(self):
        for q in (2, 3):
            code = Code.full(q, 1)
            for delta in (0.1, 0.25, 0.4 * (1 - 1 / q)):
                x_star, value = optimize_x_main(code, delta)
                assert x_star == pytest.approx(x_delta(q, delta), abs=1e-9)
                assert value == pytest.approx(gv_asymptotic(q, delta), abs=1e-9)

    def test_two_word_code_at_plotkin_boundary(self, two_code):
        # x * B'(x) = delta * m * B(x) becomes 2x^2 = 1 + x^2, so x = 1.
        x_star, value = optimize_x_main(two_code, 0.5)
        assert x_star == 1.0
        assert value == pytest.approx(0.0, abs=1e-15)

    def test_small_delta_limit(self, seven_code):
        x_star, value = optimize_x_main(seven_code, 1e-6)
        assert x_star < 1e-4
        assert value == pytest.approx(math.log2(7) / 3, abs=1e-3)

    def test_rejects_plotkin_interior(self, two_code):
        with pytest.raises(InputError):
            optimize_x_main(two_code, 0.6)
        with pytest.raises(InputError):
            optimize_x_main(two_code, 0)

    def test_optimizer_certificate(self):
        rng = random.Random(17)
        for _ in range(50):
            code = random_code(rng, rng.choice((2, 3)), rng.randint(1, 4), max_size=10)
            delta = rng.uniform(0.05, 0.9) * (1 - 1 / code.q)
            x_star, value = optimize_x_main(code, delta)
            for _ in range(1000):
                x = rng.uniform(1e-9, 1.0)
                assert value >= main_bound(code, delta, x) - 1e-9

    def test_phi_nondecreasing(self):
        rng = random.Random(19)
        for _ in range(15):
            code = random_code(rng, rng.choice((2, 3)), rng.randint(1, 4), max_size=10)
            b = distance_enumerator(code).polynomial
            bp = b.derivative()
            xs = [i / 64 for i in range(1, 65)]
            phis = [x * bp.evaluate_float(x) / b.evaluate_float(x) for x in xs]
            assert all(b2 >= a2 - 1e-12 for a2, b2 in zip(phis, phis[1:]))


class TestCaroweiBound:
    def test_distance_invariant_equals_main(self, two_code):
        rep3 = Code.from_words(2, 3, [(0, 0, 0), (1, 1, 1)])
        for code in (two_code, rep3, Code.full(2, 2), Code.full(3, 1)):
            for x in (0.1, 0.5, 0.9):
                assert carowei_bound(code, 0.3, x) == pytest.approx(
                    main_bound(code, 0.3, x), abs=1e-12
                )

    def test_x_one_gives_zero(self, seven_code):
        assert carowei_bound(seven_code, 0.2, 1) == pytest.approx(0.0, abs=1e-15)

    def test_seven_word_hand_value(self, seven_code):
        x = Fraction(1, 4)
        total = (
            Fraction(16, 31) + 3 * Fraction(64, 109) + 3 * Fraction(64, 121)
        )
        expected = math.log2(float(total)) / 3 + 0.2 * math.log2(0.25)
        assert carowei_bound(seven_code, 0.2, x) == pytest.approx(expected, abs=1e-12)

    def test_domain(self, seven_code):
        with pytest.raises(InputError):
            carowei_bound(seven_code, 0.2, 0)
        with pytest.raises(InputError):
            carowei_bound(seven_code, 0.2, 1.01)


class TestOptimizeCarowei:
    def test_distance_invariant_agrees_with_main(self, two_code):
        for code, delta in ((two_code, 0.3), (Code.full(2, 2), 0.2), (Code.full(3, 1), 0.4)):
            _, main_value = optimize_x_main(code, delta)
            _, cw_value = optimize_x_carowei(code, delta)
            assert cw_value == pytest.approx(main_value, abs=1e-9)

    def test_single_letter_reduces_to_gv(self):
        for q in (2, 3):
            code = Code.full(q, 1)
            for delta in (0.1, 0.3 * (1 - 1 / q)):
                _, value = optimize_x_carowei(code, delta)
                assert value == pytest.approx(gv_asymptotic(q, delta), abs=1e-9)

    def test_dominates_its_grid(self, seven_code):
        delta = 0.1
        _, value = optimize_x_carowei(seven_code, delta)
        for i in range(64):
            x = 10 ** (-9 * (1 - i / 63))
            assert value >= carowei_bound(seven_code, delta, x) - 1e-15

    def test_monotone_merit(self):
        rng = random.Random(23)
        for _ in range(12):
            code = random_code(rng, rng.choice((2, 3)), rng.randint(1, 4), max_size=8)
            delta = rng.uniform(0.1, 0.8) * (1 - 1 / code.q)
            _, main_value = optimize_x_main(code, delta)
            _, cw_value = optimize_x_carowei(code, delta)
            assert cw_value >= main_value - 1e-12


class TestBoundReport:
    def test_main_never_beats_gv(self, seven_code, two_code):
        for code in (seven_code, two_code):
            for delta in (0.1, 0.25, 0.4):
                report = bound_report(code, delta, BoundMethod.MAIN)
                assert report.excess <= 1e-9

    def test_gv_method_echoes_baseline(self, two_code):
        report = bound_report(two_code, 0.2, BoundMethod.GV)
        assert report.value == report.gv_baseline
        assert report.excess == 0.0
