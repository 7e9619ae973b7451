"""Passage between the factored model and ``Y**2 = X**3 + A*X + B``.

The substitution is ``X = x - s/3``, ``Y = y/2`` with ``s = e1 + e2 + e3``.
Halving ``y`` absorbs the leading 4 of the factored cubic, so the short model
is monic and textbook division polynomials apply to it unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import DEFAULT_TOL, INFINITY, Affine, Curve, Point, Tolerance
from .exceptions import DegenerateCurve, OffCurve

__all__ = [
    "ShortWeierstrass",
    "map_point",
    "short_add",
    "short_contains",
    "to_short",
    "unmap_point",
]


@dataclass(frozen=True)
class ShortWeierstrass:
    A: complex
    B: complex
    shift: complex

    @property
    def discriminant(self) -> complex:
        return -16 * (4 * self.A**3 + 27 * self.B**2)

    def rhs(self, X: complex) -> complex:
        return X * X * X + self.A * X + self.B

    def scale(self, *Xs: complex) -> float:
        """Weight-one magnitude of the model: roots scale like X, A like X**2,
        B like X**3."""
        return max(
            1.0,
            abs(self.A) ** 0.5,
            abs(self.B) ** (1.0 / 3.0),
            *(abs(X) for X in Xs),
        )


def to_short(curve: Curve) -> ShortWeierstrass:
    e1, e2, e3 = curve.roots
    # symmetric functions straight from the roots, not from expanded coefficients
    s = e1 + e2 + e3
    p = e1 * e2 + e1 * e3 + e2 * e3
    q = e1 * e2 * e3
    sw = ShortWeierstrass(
        A=p - s * s / 3,
        B=-2 * s**3 / 27 + p * s / 3 - q,
        shift=s / 3,
    )
    if sw.discriminant == 0:
        raise DegenerateCurve(f"short model of {curve.roots} is singular")
    return sw


def short_contains(sw: ShortWeierstrass, p: Point, tol: Tolerance = DEFAULT_TOL) -> bool:
    if p.is_infinity:
        return True
    return abs(p.y * p.y - sw.rhs(p.x)) <= tol.rel * sw.scale(p.x) ** 3


def _require_short(sw: ShortWeierstrass, p: Point, tol: Tolerance) -> None:
    if not short_contains(sw, p, tol):
        raise OffCurve(f"{p} is not on Y^2 = X^3 + ({sw.A})X + ({sw.B})")


def map_point(sw: ShortWeierstrass, p: Point, tol: Tolerance = DEFAULT_TOL) -> Point:
    if p.is_infinity:
        return INFINITY
    image = Affine(p.x - sw.shift, p.y / 2)
    _require_short(sw, image, tol)
    return image


def unmap_point(sw: ShortWeierstrass, p: Point, tol: Tolerance = DEFAULT_TOL) -> Point:
    if p.is_infinity:
        return INFINITY
    _require_short(sw, p, tol)
    return Affine(p.x + sw.shift, 2 * p.y)


def short_add(
    sw: ShortWeierstrass, p: Point, q: Point, tol: Tolerance = DEFAULT_TOL
) -> Point:
    """Group law on the monic short model, written without reference to the
    factored curve.  Used to cross-check the factored group law."""
    _require_short(sw, p, tol)
    _require_short(sw, q, tol)
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    bound = tol.rel * sw.scale(p.x, q.x)
    if abs(p.x - q.x) <= bound:
        if abs(p.y + q.y) <= bound:
            return INFINITY
        if abs(p.y - q.y) > bound:
            raise OffCurve(f"inconsistent addends {p} and {q}")
        lam = (3 * p.x * p.x + sw.A) / (2 * p.y)
    else:
        lam = (q.y - p.y) / (q.x - p.x)
    x3 = lam * lam - p.x - q.x
    return Affine(x3, lam * (p.x - x3) - p.y)
