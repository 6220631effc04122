"""Improvement conditions over the substituted variable z in (0, 1).

Two condition kinds are swept:

* LEMMA4: the z-form of the clique-count condition for the global bound,
  (1/|C|)(1+(q-1)z)^m B((1-z)/(1+(q-1)z)). An improvement over the
  asymptotic Gilbert-Varshamov baseline exists iff this drops below 1.
* LEMMA8: the matching condition for the Caro-Wei refinement,
  sum_c 1/((1+(q-1)z)^m B_c((1-z)/(1+(q-1)z))). An improvement exists iff
  this exceeds 1 for some z.

Single-point evaluators work directly on the rational substitution, so they
are independent of the polynomial-expansion route used by the spectrum
module (the two are cross-checked in tests). Sweeps precompute the expanded
integer-coefficient z-forms once per code and evaluate exactly on a rational
grid; verdicts always rest on exact comparisons, never on floats.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .codes import Code, all_local_enumerators, distance_enumerator
from .delsarte import spectrum_by_substitution
from .errors import InputError
from .rational import RationalPolynomial

GOLDEN_RATIO = (1 + 5**0.5) / 2
REFINE_TOLERANCE = 1e-10
SNAP_DENOMINATOR = 10**6
DEFAULT_GRID_SIZE = 256


class ConditionKind(str, enum.Enum):
    LEMMA4 = "lemma4"
    LEMMA8 = "lemma8"


def snap_to_rational(z, max_denominator: int = 10**9) -> Fraction:
    """Exact rationals pass through; floats snap to a nearby small fraction."""
    if isinstance(z, Rational):
        return Fraction(z)
    return Fraction(z).limit_denominator(max_denominator)


def _check_z(z) -> Fraction:
    zq = snap_to_rational(z)
    if not 0 <= zq < 1:
        raise InputError(f"z must lie in [0, 1), got {z!r}")
    return zq


def z_of_delta(q: int, delta) -> Fraction:
    """Dictionary delta -> z = 1 - q*delta/(q-1)."""
    d = snap_to_rational(delta)
    return 1 - Fraction(q, q - 1) * d


def delta_of_z(q: int, z) -> Fraction:
    """Dictionary z -> delta = (1-z)(q-1)/q; inverse of z_of_delta."""
    zq = snap_to_rational(z)
    return (1 - zq) * Fraction(q - 1, q)


def lemma4_lhs(code: Code, z) -> Fraction:
    """Exact (1/|C|)(1+(q-1)z)^m B((1-z)/(1+(q-1)z)) by direct substitution."""
    zq = _check_z(z)
    q, m = code.q, code.m
    b = distance_enumerator(code).polynomial
    denom = 1 + (q - 1) * zq
    x = (1 - zq) / denom
    return b.evaluate(x) * denom**m / code.size


def lemma4_lhs_delta_form(code: Code, delta) -> Fraction:
    """The same condition in the delta variable:
    (q^m/|C|)(1-delta)^m B(delta/((q-1)(1-delta)))."""
    d = snap_to_rational(delta)
    if not 0 < d < 1:
        raise InputError(f"delta must lie in (0, 1), got {delta!r}")
    q, m = code.q, code.m
    b = distance_enumerator(code).polynomial
    x = d / ((q - 1) * (1 - d))
    return Fraction(q**m, code.size) * (1 - d) ** m * b.evaluate(x)


def lemma8_lhs(code: Code, z) -> Fraction:
    """Exact sum_c 1/((1+(q-1)z)^m B_c((1-z)/(1+(q-1)z)))."""
    zq = _check_z(z)
    q, m = code.q, code.m
    denom = 1 + (q - 1) * zq
    x = (1 - zq) / denom
    scale = denom**m
    total = Fraction(0)
    for local in all_local_enumerators(code):
        total += 1 / (scale * local.polynomial.evaluate(x))
    return total


def local_zforms(code: Code) -> tuple[RationalPolynomial, ...]:
    """Integer-coefficient polynomials T_c(z) = sum_j cnt_c[j] (1-z)^j (1+(q-1)z)^(m-j).

    lemma8_lhs(code, z) == sum_c 1/T_c(z), and sum_c T_c == |C|^2 * A(z).
    """
    q, m = code.q, code.m
    one_minus = RationalPolynomial((1, -1))
    one_plus = RationalPolynomial((1, q - 1))
    minus_pows = [one_minus**j for j in range(m + 1)]
    plus_pows = [one_plus**j for j in range(m + 1)]
    forms = []
    for local in all_local_enumerators(code):
        acc = RationalPolynomial((0,))
        for j, cnt in enumerate(local.counts):
            if cnt:
                acc = acc + cnt * minus_pows[j] * plus_pows[m - j]
        forms.append(acc)
    return tuple(forms)


@dataclass(frozen=True)
class ConditionSweep:
    """Grid evaluation of one condition, with the improvement-relevant extremum.

    For LEMMA8 the tracked extremum is the supremum of the LHS; for LEMMA4,
    where an improvement means dropping below 1, it is the infimum. The
    `improves` verdict is decided by exact comparison at rational points.
    """

    kind: ConditionKind
    z_grid: tuple[float, ...]
    lhs_values: tuple[float, ...]
    sup_estimate: float
    argmax_z: float
    improves: bool
    argmax_z_exact: Fraction
    sup_exact: Fraction
    lhs_exact: tuple[Fraction, ...]


def _grid(grid_size: int) -> list[Fraction]:
    return [Fraction(k, grid_size) for k in range(1, grid_size)]


def _exact_evaluator(code: Code, kind: ConditionKind):
    """Exact LHS evaluator built from the precomputed z-forms."""
    if kind is ConditionKind.LEMMA4:
        a = spectrum_by_substitution(code).polynomial
        return lambda z: a.evaluate(z)
    forms = local_zforms(code)
    return lambda z: sum((1 / f.evaluate(z) for f in forms), Fraction(0))


def _float_evaluator(code: Code, kind: ConditionKind):
    if kind is ConditionKind.LEMMA4:
        a = spectrum_by_substitution(code).polynomial
        return a.evaluate_float
    forms = local_zforms(code)
    return lambda z: sum(1.0 / f.evaluate_float(z) for f in forms)


def _golden_section(objective, lo: float, hi: float, maximize: bool) -> float:
    """Deterministic golden-section extremum of a unimodal objective on [lo, hi]."""
    sign = -1.0 if maximize else 1.0
    a, b = lo, hi
    c = b - (b - a) / GOLDEN_RATIO
    d = a + (b - a) / GOLDEN_RATIO
    fc, fd = sign * objective(c), sign * objective(d)
    while abs(b - a) > REFINE_TOLERANCE:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - (b - a) / GOLDEN_RATIO
            fc = sign * objective(c)
        else:
            a, c, fc = c, d, fd
            d = a + (b - a) / GOLDEN_RATIO
            fd = sign * objective(d)
    return (a + b) / 2


def sweep(
    code: Code,
    kind: ConditionKind,
    grid_size: int = DEFAULT_GRID_SIZE,
    refine: bool = True,
) -> ConditionSweep:
    """Evaluate one condition on the uniform rational grid k/grid_size, k=1..grid_size-1.

    With `refine`, a golden-section pass (in floats) sharpens the extremum
    around the best grid point; the refined z is snapped back to a rational
    and the verdict re-checked exactly there.
    """
    if grid_size < 16:
        raise InputError(f"grid_size must be >= 16, got {grid_size}")
    kind = ConditionKind(kind)
    zs = _grid(grid_size)
    exact = _exact_evaluator(code, kind)
    values = [exact(z) for z in zs]
    maximize = kind is ConditionKind.LEMMA8
    if maximize:
        best_idx = max(range(len(zs)), key=lambda i: (values[i], -i))
        improves = any(v > 1 for v in values)
    else:
        best_idx = min(range(len(zs)), key=lambda i: (values[i], i))
        improves = any(v < 1 for v in values)
    best_z, best_value = zs[best_idx], values[best_idx]

    if refine:
        flt = _float_evaluator(code, kind)
        lo = float(zs[best_idx - 1]) if best_idx > 0 else float(zs[0]) / 2
        hi = float(zs[best_idx + 1]) if best_idx + 1 < len(zs) else (float(zs[-1]) + 1) / 2
        z_star = _golden_section(flt, lo, hi, maximize)
        snapped = Fraction(z_star).limit_denominator(SNAP_DENOMINATOR)
        if 0 < snapped < 1:
            refined_value = exact(snapped)
            better = refined_value > best_value if maximize else refined_value < best_value
            if better:
                best_z, best_value = snapped, refined_value
            if maximize:
                improves = improves or refined_value > 1
            else:
                improves = improves or refined_value < 1

    return ConditionSweep(
        kind=kind,
        z_grid=tuple(float(z) for z in zs),
        lhs_values=tuple(float(v) for v in values),
        sup_estimate=float(best_value),
        argmax_z=float(best_z),
        improves=improves,
        argmax_z_exact=best_z,
        sup_exact=best_value,
        lhs_exact=tuple(values),
    )


@dataclass(frozen=True)
class MonotonicityReport:
    """Exact successive-difference check of a condition along the grid."""

    kind: ConditionKind
    monotone_decreasing: bool
    first_violation: Fraction | None
    center_monotone: tuple[bool, ...] | None

    @property
    def all_terms_monotone(self) -> bool | None:
        if self.center_monotone is None:
            return None
        return all(self.center_monotone)


def monotonicity_probe(
    code: Code, kind: ConditionKind, grid_size: int = 64
) -> MonotonicityReport:
    """Check whether the LHS is non-increasing across the grid.

    For LEMMA8 the per-center reciprocal terms are probed as well, since the
    sum can decrease monotonically while individual terms do not.
    """
    if grid_size < 64:
        raise InputError(f"grid_size must be >= 64, got {grid_size}")
    kind = ConditionKind(kind)
    zs = _grid(grid_size)
    exact = _exact_evaluator(code, kind)
    values = [exact(z) for z in zs]
    monotone = True
    first_violation: Fraction | None = None
    for prev, cur, z in zip(values, values[1:], zs[1:]):
        if cur > prev:
            monotone = False
            first_violation = z
            break

    center_monotone: tuple[bool, ...] | None = None
    if kind is ConditionKind.LEMMA8:
        flags = []
        for form in local_zforms(code):
            series = [1 / form.evaluate(z) for z in zs]
            flags.append(all(b <= a for a, b in zip(series, series[1:])))
        center_monotone = tuple(flags)

    return MonotonicityReport(kind, monotone, first_violation, center_monotone)
