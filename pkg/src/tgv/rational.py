"""Dense polynomials with exact rational coefficients.

All arithmetic (addition, multiplication, powers, evaluation at a rational
point) stays in `fractions.Fraction`; nothing here ever rounds. A float
evaluation path exists for optimizer inner loops and is clearly separate.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

from .errors import InputError

Coefficient = Union[int, Fraction]


def _as_fraction(value) -> Fraction:
    """Exact conversion; floats map to their exact binary value."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


class RationalPolynomial:
    """Polynomial sum(c[j] * x**j) with Fraction coefficients, index = degree.

    Trailing zero coefficients are tolerated on input; equality, degree and
    evaluation all behave as if they were stripped.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[Coefficient]):
        coeffs = tuple(_as_fraction(c) for c in coefficients)
        if not coeffs:
            coeffs = (Fraction(0),)
        self._coeffs = coeffs

    @classmethod
    def constant(cls, value: Coefficient) -> "RationalPolynomial":
        return cls((value,))

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def coefficient(self, j: int) -> Fraction:
        """Coefficient of x**j (zero beyond the stored length)."""
        if 0 <= j < len(self._coeffs):
            return self._coeffs[j]
        return Fraction(0)

    def degree(self) -> int:
        """Largest j with a nonzero coefficient; -1 for the zero polynomial."""
        for j in range(len(self._coeffs) - 1, -1, -1):
            if self._coeffs[j]:
                return j
        return -1

    def trimmed(self) -> tuple[Fraction, ...]:
        """Coefficients with trailing zeros removed (empty for the zero polynomial)."""
        return self._coeffs[: self.degree() + 1]

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPolynomial):
            return self.trimmed() == other.trimmed()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.trimmed())

    def __add__(self, other) -> "RationalPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] += c
        return RationalPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(tuple(-c for c in self._coeffs))

    def __sub__(self, other) -> "RationalPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RationalPolynomial":
        if isinstance(other, (int, Fraction)):
            scale = _as_fraction(other)
            return RationalPolynomial(tuple(c * scale for c in self._coeffs))
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        a, b = self.trimmed(), other.trimmed()
        if not a or not b:
            return RationalPolynomial((0,))
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ci in enumerate(a):
            if not ci:
                continue
            for j, cj in enumerate(b):
                if cj:
                    out[i + j] += ci * cj
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RationalPolynomial":
        if not isinstance(n, int) or n < 0:
            raise InputError(f"polynomial power requires an integer n >= 0, got {n!r}")
        result = RationalPolynomial((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self) -> "RationalPolynomial":
        if len(self._coeffs) <= 1:
            return RationalPolynomial((0,))
        return RationalPolynomial(
            tuple(j * c for j, c in enumerate(self._coeffs) if j > 0)
        )

    def __call__(self, x) -> Fraction:
        return self.evaluate(x)

    def evaluate(self, x) -> Fraction:
        """Exact Horner evaluation; float arguments use their exact binary value."""
        xq = _as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * xq + c
        return acc

    def evaluate_float(self, x: float) -> float:
        """Float Horner evaluation, for optimizer inner loops only."""
        acc = 0.0
        for c in reversed(self._coeffs):
            acc = acc * x + float(c)
        return acc

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, (int, Rational)):
            return RationalPolynomial((other,))
        return NotImplemented

    def __repr__(self) -> str:
        return f"RationalPolynomial({list(self.trimmed()) or [0]})"
