"""Asymptotic rate lower bounds: the Gilbert-Varshamov baseline and the two
clique-based bounds built from a code's distance enumerators.

Bound values are floats, but every polynomial evaluation feeding them is done
in exact rationals first and converted to a real exactly once; logarithms of
exact fractions go through integer-argument `math.log`, which is safe for
arbitrarily large numerators.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .codes import Code, all_local_enumerators, distance_enumerator
from .errors import InputError
from .rational import RationalPolynomial

BISECTION_TOLERANCE = 1e-12
BISECTION_MAX_ITER = 200
GOLDEN_TOLERANCE = 1e-10
GRID_POINTS = 64
GRID_SMALLEST_X = 1e-9
GOLDEN_RATIO = (1 + 5**0.5) / 2


class BoundMethod(str, enum.Enum):
    GV = "gv"
    MAIN = "main"
    CARO_WEI = "carowei"


@dataclass(frozen=True)
class BoundReport:
    """One (code, delta, method) row: bound value against the GV baseline."""

    method: BoundMethod
    delta: float
    x_star: float
    value: float
    gv_baseline: float

    @property
    def excess(self) -> float:
        return self.value - self.gv_baseline


def entropy(q: int, x: float) -> float:
    """q-ary entropy; h_q(0) = 0 and h_q(1) = log_q(q-1) by convention."""
    if q < 2:
        raise InputError(f"alphabet size must be >= 2, got {q}")
    if not 0 <= x <= 1:
        raise InputError(f"entropy argument must lie in [0, 1], got {x}")
    log_q = math.log(q)
    if x == 0:
        return 0.0
    if x == 1:
        return math.log(q - 1) / log_q
    return (
        -x * math.log(x) - (1 - x) * math.log(1 - x) + x * math.log(q - 1)
    ) / log_q


def gv_asymptotic(q: int, delta: float) -> float:
    """1 - h_q(delta), clamped to 0 in the Plotkin region delta >= 1 - 1/q."""
    if not 0 <= delta <= 1:
        raise InputError(f"delta must lie in [0, 1], got {delta}")
    if delta >= (q - 1) / q:
        return 0.0
    return 1.0 - entropy(q, delta)


def x_delta(q: int, delta: float) -> float:
    """The substitution point delta / ((q-1)(1-delta)) where the single-letter
    bound collapses to the GV baseline."""
    return delta / ((q - 1) * (1 - delta))


def _log_q_fraction(value: Fraction, q: int) -> float:
    """log_q of a positive exact rational, safe for huge numerators."""
    return (math.log(value.numerator) - math.log(value.denominator)) / math.log(q)


def _check_x(x, allow_one: bool = True) -> Fraction:
    xq = Fraction(x)
    if xq <= 0 or xq > 1 or (not allow_one and xq == 1):
        raise InputError(f"x must lie in (0, 1], got {x!r}")
    return xq


def _check_delta_open(delta) -> None:
    if not 0 < delta < 1:
        raise InputError(f"delta must lie in (0, 1), got {delta!r}")


def _check_delta_optimizer(code: Code, delta) -> None:
    # Optimizers accept the closed Plotkin boundary delta = 1 - 1/q.
    if not 0 < delta <= (code.q - 1) / code.q:
        raise InputError(
            f"delta must lie in (0, 1 - 1/q] = (0, {(code.q - 1) / code.q}], got {delta!r}"
        )


def main_bound(code: Code, delta: float, x) -> float:
    """(1/m) log_q(|C| / B(x)) + delta log_q(x), with B(x) evaluated exactly."""
    _check_delta_open(delta)
    xq = _check_x(x)
    b = distance_enumerator(code).polynomial
    bx = b.evaluate(xq)
    ratio = Fraction(code.size) / bx
    return _log_q_fraction(ratio, code.q) / code.m + delta * _log_q_fraction(xq, code.q)


def carowei_bound(code: Code, delta: float, x) -> float:
    """(1/m) log_q(sum_c 1/B_c(x)) + delta log_q(x), sum taken in exact rationals.

    Defined on (0, 1); x = 1 is allowed as the continuous extension, where the
    reciprocal sum is exactly 1 and the bound value is 0.
    """
    _check_delta_open(delta)
    xq = _check_x(x)
    total = Fraction(0)
    for local in all_local_enumerators(code):
        total += 1 / local.polynomial.evaluate(xq)
    return _log_q_fraction(total, code.q) / code.m + delta * _log_q_fraction(xq, code.q)


def _phi(b: RationalPolynomial, b_prime: RationalPolynomial, x: float) -> float:
    """x B'(x) / B(x): the distance-distribution mean reweighted by x^j.

    Nondecreasing on (0, 1] because B has nonnegative coefficients, which
    makes bisection on phi(x) - delta*m valid.
    """
    return x * b_prime.evaluate_float(x) / b.evaluate_float(x)


def optimize_x_main(code: Code, delta: float) -> tuple[float, float]:
    """Maximize the main bound over x in (0, 1].

    The optimizer solves x B'(x) = delta*m*B(x) by bisection on the
    nondecreasing phi(x) = x B'(x)/B(x); when phi(1) <= delta*m the bound is
    nondecreasing on the whole interval and x = 1 is optimal.
    """
    _check_delta_optimizer(code, delta)
    b = distance_enumerator(code).polynomial
    b_prime = b.derivative()
    target = delta * code.m
    if _phi(b, b_prime, 1.0) <= target:
        x_star = 1.0
    else:
        lo, hi = 0.0, 1.0
        for _ in range(BISECTION_MAX_ITER):
            if hi - lo <= BISECTION_TOLERANCE:
                break
            mid = (lo + hi) / 2
            if _phi(b, b_prime, mid) < target:
                lo = mid
            else:
                hi = mid
        x_star = (lo + hi) / 2
    return x_star, main_bound(code, delta, x_star)


def _carowei_objective(code: Code, delta: float):
    """Float-path objective for the grid/golden search."""
    locals_ = [loc.polynomial for loc in all_local_enumerators(code)]
    log_q = math.log(code.q)

    def value(x: float) -> float:
        total = sum(1.0 / p.evaluate_float(x) for p in locals_)
        return math.log(total) / (code.m * log_q) + delta * math.log(x) / log_q

    return value


def optimize_x_carowei(code: Code, delta: float) -> tuple[float, float]:
    """Maximize the Caro-Wei bound over x via a log-spaced grid plus
    golden-section refinement; deterministic for fixed inputs."""
    _check_delta_optimizer(code, delta)
    exponent_span = math.log10(GRID_SMALLEST_X)
    grid = [
        10 ** (exponent_span * (1 - i / (GRID_POINTS - 1))) for i in range(GRID_POINTS)
    ]
    grid_values = [carowei_bound(code, delta, x) for x in grid]
    best_idx = max(range(GRID_POINTS), key=lambda i: (grid_values[i], -i))
    x_star, best = grid[best_idx], grid_values[best_idx]

    objective = _carowei_objective(code, delta)
    lo = grid[best_idx - 1] if best_idx > 0 else grid[0] / 10
    hi = grid[best_idx + 1] if best_idx + 1 < GRID_POINTS else 1.0
    a, b_ = lo, hi
    c = b_ - (b_ - a) / GOLDEN_RATIO
    d = a + (b_ - a) / GOLDEN_RATIO
    fc, fd = objective(c), objective(d)
    while abs(b_ - a) > GOLDEN_TOLERANCE:
        if fc > fd:
            b_, d, fd = d, c, fc
            c = b_ - (b_ - a) / GOLDEN_RATIO
            fc = objective(c)
        else:
            a, c, fc = c, d, fd
            d = a + (b_ - a) / GOLDEN_RATIO
            fd = objective(d)
    x_refined = (a + b_) / 2
    refined = carowei_bound(code, delta, x_refined)
    if refined > best:
        x_star, best = x_refined, refined
    return x_star, best


def bound_report(code: Code, delta: float, method: BoundMethod) -> BoundReport:
    """Optimize one method at one delta and package it against the GV baseline."""
    method = BoundMethod(method)
    baseline = gv_asymptotic(code.q, delta)
    if method is BoundMethod.GV:
        return BoundReport(method, delta, x_delta(code.q, delta), baseline, baseline)
    if method is BoundMethod.MAIN:
        x_star, value = optimize_x_main(code, delta)
    else:
        x_star, value = optimize_x_carowei(code, delta)
    return BoundReport(method, delta, x_star, value, baseline)
