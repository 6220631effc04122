"""Dual spectrum: the two transform routes, sign verdicts, and exact anchors."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import code_strategy
from tgv import (
    Code,
    krawtchouk,
    spectrum_by_krawtchouk,
    spectrum_by_substitution,
    verify_nonnegativity,
)


def test_two_word_code_spectrum(two_code):
    spec = spectrum_by_substitution(two_code)
    assert spec.coefficients == (Fraction(1), Fraction(0), Fraction(1))
    assert spec.all_nonnegative
    assert spec.min_coefficient == 0


def test_full_code_collapses_to_one():
    for q in (2, 3):
        for m in (1, 2, 3):
            spec = spectrum_by_substitution(Code.full(q, m))
            assert spec.coefficients[0] == 1
            assert all(a == 0 for a in spec.coefficients[1:])


def test_seven_word_code_spectrum(seven_code):
    spec = spectrum_by_substitution(seven_code)
    assert spec.coefficients == (
        Fraction(1),
        Fraction(3, 49),
        Fraction(3, 49),
        Fraction(1, 49),
    )


def test_krawtchouk_hand_values():
    # m=2, q=2: K_1(j) = 2 - 2j.
    assert [krawtchouk(2, 2, 1, j) for j in range(3)] == [2, 0, -2]
    assert krawtchouk(2, 2, 2, 0) == 1
    assert krawtchouk(2, 2, 2, 2) == 1


def test_krawtchouk_route_on_two_word_code(two_code):
    spec = spectrum_by_krawtchouk(two_code)
    assert spec.coefficients == (Fraction(1), Fraction(0), Fraction(1))


def test_verdicts(two_code, seven_code):
    assert verify_nonnegativity(two_code) == (True, None)
    assert verify_nonnegativity(seven_code) == (True, None)


@given(code_strategy())
@settings(max_examples=60)
def test_routes_agree_and_anchors_hold(code):
    by_sub = spectrum_by_substitution(code)
    by_kraw = spectrum_by_krawtchouk(code)
    assert by_sub.coefficients == by_kraw.coefficients
    assert by_sub.coefficients[0] == 1
    assert sum(by_sub.coefficients) == Fraction(code.q**code.m, code.size)
    assert by_sub.all_nonnegative


@given(code_strategy(max_m=3), st.integers(0, 31))
@settings(max_examples=40)
def test_spectrum_at_least_one_on_unit_interval(code, numerator):
    # A(z) >= 1 for z in [0, 1) follows from A_0 = 1 and A_i >= 0.
    z = Fraction(numerator, 32)
    value = spectrum_by_substitution(code).polynomial.evaluate(z)
    assert value >= 1
