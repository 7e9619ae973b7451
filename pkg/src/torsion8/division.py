"""Torsion certification by division polynomials on the short model.

For an affine point ``P`` on ``Y**2 = X**3 + A*X + B`` and ``n >= 2``,
``n*P`` is the identity exactly when ``psi_n(P) = 0``.  This module evaluates
``psi_n`` pointwise and shares no code with the chord-tangent group law.

Even-index polynomials carry a factor ``psi_2 = 2Y``.  The recurrences are
run on the reduced values ``f_n = psi_n`` (n odd) and ``f_n = psi_n / (2Y)``
(n even), which are polynomials in ``X`` alone; ``(2Y)**2`` is replaced by
``F = 4(X**3 + A*X + B)``.  Nothing is ever divided by ``Y``.

Whether a value "vanishes" is judged against the size of the intermediate
terms that produced it.  Next to each ``f_n`` the recurrence carries a running
error scale ``s_n``: first-order propagation of relative perturbations of
``X`` and of every rounding, so that the floating-point error of ``f_n`` is
about ``eps * s_n``.  ``f_n`` vanishes when ``|f_n| <= rel * s_n``.  For a
value with no cancellation ``s_n`` is a small multiple of ``|f_n|``; for a
true zero ``|f_n|`` is a few ``eps * s_n``.  Both sides are homogeneous of the
same degree in the coordinates, so the verdict does not depend on the scale
of the roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .curve import DEFAULT_TOL, Affine, Point, Tolerance
from .exceptions import OffCurve, UnsupportedIndex
from .normalize import ShortWeierstrass, short_contains

__all__ = [
    "MAX_INDEX",
    "PsiValue",
    "is_order_exactly_8",
    "oracle_order",
    "psi",
    "psi_table",
    "torsion_profile",
]

MAX_INDEX = 16


@dataclass(frozen=True)
class PsiValue:
    n: int
    value: complex
    scale: float
    vanishes: bool


def _poly(X: complex, sX: float, terms) -> tuple[complex, float]:
    # terms are (c, d) for c * X**d; sX bounds the absolute error of X in eps units
    aX = abs(X)
    value = 0j
    s = 0.0
    for c, d in terms:
        value += c * X**d
        s += (2 + d) * abs(c) * aX**d
        if d:
            s += d * abs(c) * aX ** (d - 1) * sX
    return value, s


def _mul(a: complex, sa: float, b: complex, sb: float) -> tuple[complex, float]:
    ab = a * b
    return ab, abs(b) * sa + abs(a) * sb + abs(ab)


def _weight_scale(sw: ShortWeierstrass, X: complex) -> float:
    return max(abs(X), abs(sw.A) ** 0.5, abs(sw.B) ** (1.0 / 3.0))


def _power(lam: float, weight: float) -> float:
    try:
        return lam**weight
    except OverflowError:
        # the verdict was taken on the rescaled model; only the report saturates
        return math.inf


def _reduced_table(A: complex, B: complex, X: complex) -> tuple[list[complex], list[float]]:
    # expects a model rescaled so that |X|, |A|**(1/2), |B|**(1/3) are at most 1
    sX = 1.0
    F, sF = _poly(X, sX, ((4, 3), (4 * A, 1), (4 * B, 0)))
    F2, sF2 = _mul(F, sF, F, sF)

    f = [0j] * (MAX_INDEX + 1)
    s = [0.0] * (MAX_INDEX + 1)
    f[1] = f[2] = 1 + 0j
    f[3], s[3] = _poly(X, sX, ((3, 4), (6 * A, 2), (12 * B, 1), (-A * A, 0)))
    f[4], s[4] = _poly(
        X,
        sX,
        (
            (2, 6),
            (10 * A, 4),
            (40 * B, 3),
            (-10 * A * A, 2),
            (-8 * A * B, 1),
            (-16 * B * B - 2 * A**3, 0),
        ),
    )

    def cube(k: int) -> tuple[complex, float]:
        sq, s_sq = _mul(f[k], s[k], f[k], s[k])
        return _mul(sq, s_sq, f[k], s[k])

    for n in range(5, MAX_INDEX + 1):
        k = n // 2
        if n % 2:
            # psi_{2k+1} = psi_{k+2} psi_k^3 - psi_{k-1} psi_{k+1}^3
            lead, s_lead = _mul(f[k + 2], s[k + 2], *cube(k))
            trail, s_trail = _mul(f[k - 1], s[k - 1], *cube(k + 1))
            if k % 2 == 0:
                lead, s_lead = _mul(lead, s_lead, F2, sF2)
            else:
                trail, s_trail = _mul(trail, s_trail, F2, sF2)
            f[n] = lead - trail
            s[n] = s_lead + s_trail + abs(lead) + abs(trail)
        else:
            # psi_{2k} = psi_k / (2Y) * (psi_{k+2} psi_{k-1}^2 - psi_{k-2} psi_{k+1}^2)
            sq1 = _mul(f[k - 1], s[k - 1], f[k - 1], s[k - 1])
            sq2 = _mul(f[k + 1], s[k + 1], f[k + 1], s[k + 1])
            lead, s_lead = _mul(f[k + 2], s[k + 2], *sq1)
            trail, s_trail = _mul(f[k - 2], s[k - 2], *sq2)
            diff = lead - trail
            s_diff = s_lead + s_trail + abs(lead) + abs(trail)
            f[n], s[n] = _mul(f[k], s[k], diff, s_diff)
    return f, s


def psi_table(sw: ShortWeierstrass, p: Point, tol: Tolerance = DEFAULT_TOL) -> list[PsiValue]:
    """``psi_1 .. psi_16`` at the affine point ``p``, each with its scale and
    vanishing verdict."""
    if p.is_infinity:
        raise ValueError("division polynomials are evaluated at affine points only")
    if not short_contains(sw, p, tol):
        raise OffCurve(f"{p} is not on the short model")
    # psi_n is homogeneous: X ~ lam, A ~ lam**2, B ~ lam**3, Y ~ lam**1.5.
    # Evaluate on the unit-sized model and restore lam only in the output.
    lam = _weight_scale(sw, p.x)
    f, s = _reduced_table(sw.A / lam**2, sw.B / lam**3, p.x / lam)
    two_y = 2 * p.y / lam**1.5
    y_zero = abs(two_y) <= 2 * tol.rel
    out = []
    for n in range(1, MAX_INDEX + 1):
        small = abs(f[n]) <= tol.rel * s[n]
        if n % 2:
            value, scale = f[n], s[n]
        else:
            value, scale = two_y * f[n], abs(two_y) * s[n] + 2 * abs(f[n])
            small = small or y_zero
        factor = _power(lam, (n * n - 1) / 2)
        out.append(PsiValue(n, value * factor, scale * factor, small))
    return out


def psi(n: int, sw: ShortWeierstrass, X: complex, Y: complex, tol: Tolerance = DEFAULT_TOL) -> complex:
    if not 1 <= n <= MAX_INDEX:
        raise UnsupportedIndex(f"psi_{n}: index must be in 1..{MAX_INDEX}")
    return psi_table(sw, Affine(X, Y), tol)[n - 1].value


def torsion_profile(
    sw: ShortWeierstrass, p: Point, tol: Tolerance = DEFAULT_TOL
) -> list[tuple[int, bool]]:
    return [(v.n, v.vanishes) for v in psi_table(sw, p, tol)[1:]]


def oracle_order(sw: ShortWeierstrass, p: Point, tol: Tolerance = DEFAULT_TOL) -> Optional[int]:
    """Smallest ``n`` in 2..16 with vanishing ``psi_n``; None if there is none.

    The identity is given order 1 without evaluating anything.
    """
    if p.is_infinity:
        return 1
    for n, vanishes in torsion_profile(sw, p, tol):
        if vanishes:
            return n
    return None


def is_order_exactly_8(sw: ShortWeierstrass, p: Point, tol: Tolerance = DEFAULT_TOL) -> bool:
    # divisors of 8 are 1, 2, 4, 8; psi_2 = 2Y and psi_4 rule out the proper ones
    if p.is_infinity:
        return False
    table = psi_table(sw, p, tol)
    return table[7].vanishes and not table[3].vanishes and not table[1].vanishes
