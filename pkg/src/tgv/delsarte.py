"""Dual spectrum of a code's distance distribution, computed two independent ways.

The spectrum A(z) is the distance enumerator pushed through the substitution
x -> (1-z)/(1+(q-1)z) and cleared against the prefactor (1+(q-1)z)^m, scaled
by 1/|C|. The Delsarte inequalities say every coefficient A_i is nonnegative;
this module verifies that exactly, with the classical Krawtchouk-sum form of
the same transform serving as an independent oracle for the polynomial
expansion. A disagreement between the two is an internal-consistency alarm.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .codes import Code, distance_enumerator
from .errors import ConsistencyError
from .rational import RationalPolynomial


@dataclass(frozen=True)
class DelsarteSpectrum:
    """Coefficients A_0..A_m of the dual spectrum, with the sign verdict."""

    code: Code
    coefficients: tuple[Fraction, ...]

    @property
    def polynomial(self) -> RationalPolynomial:
        return RationalPolynomial(self.coefficients)

    @property
    def min_coefficient(self) -> Fraction:
        return min(self.coefficients)

    @property
    def all_nonnegative(self) -> bool:
        return self.min_coefficient >= 0


def spectrum_by_substitution(code: Code) -> DelsarteSpectrum:
    """Expand (1/|C|) * sum_j B_j (1-z)^j (1+(q-1)z)^(m-j) as a polynomial in z."""
    q, m = code.q, code.m
    b = distance_enumerator(code).polynomial
    one_minus = RationalPolynomial((1, -1))
    one_plus = RationalPolynomial((1, q - 1))
    acc = RationalPolynomial((0,))
    for j in range(m + 1):
        bj = b.coefficient(j)
        if bj:
            acc = acc + bj * (one_minus**j) * (one_plus ** (m - j))
    inv_size = Fraction(1, code.size)
    coeffs = tuple(inv_size * acc.coefficient(i) for i in range(m + 1))
    return DelsarteSpectrum(code, coeffs)


def krawtchouk(m: int, q: int, i: int, j: int) -> int:
    """K_i(j) = sum_s (-1)^s (q-1)^(i-s) C(j,s) C(m-j, i-s), exact."""
    total = 0
    for s in range(min(i, j) + 1):
        term = comb(j, s) * comb(m - j, i - s) * (q - 1) ** (i - s)
        total += -term if s & 1 else term
    return total


def spectrum_by_krawtchouk(code: Code) -> DelsarteSpectrum:
    """A_i = (1/|C|) * sum_j B_j K_i(j); independent of the expansion route."""
    q, m = code.q, code.m
    b = distance_enumerator(code).polynomial
    inv_size = Fraction(1, code.size)
    coeffs = tuple(
        inv_size * sum(b.coefficient(j) * krawtchouk(m, q, i, j) for j in range(m + 1))
        for i in range(m + 1)
    )
    return DelsarteSpectrum(code, coeffs)


def verify_nonnegativity(code: Code) -> tuple[bool, int | None]:
    """Exact sign check of the spectrum.

    Returns (True, None) when every A_i >= 0, else (False, smallest violating
    index). Both transform routes are computed and must agree exactly; a
    mismatch raises ConsistencyError since it would mean an algebra bug, and a
    genuine negative coefficient would falsify the Delsarte inequalities.
    """
    by_sub = spectrum_by_substitution(code)
    by_kraw = spectrum_by_krawtchouk(code)
    if by_sub.coefficients != by_kraw.coefficients:
        raise ConsistencyError(
            f"spectrum transforms disagree on {code}: "
            f"{by_sub.coefficients} vs {by_kraw.coefficients}"
        )
    for i, a in enumerate(by_sub.coefficients):
        if a < 0:
            return False, i
    return True, None
