"""Chord-tangent group law on ``y**2 = 4(x - e1)(x - e2)(x - e3)`` over C.

The cubic has leading coefficient 4, so a line ``y = lam*x + c`` meets the
curve where ``4x**3 - (lam**2 + 4s)x**2 + ... = 0`` with ``s = e1 + e2 + e3``.
The three intersection abscissae therefore sum to ``lam**2/4 + s``, which is
all the addition and doubling formulas below need.

Points are either :data:`INFINITY` or an :class:`Affine` pair.  Equality of
floating-point coordinates is decided by a :class:`Tolerance`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .exceptions import DegenerateCurve, OffCurve
from .radicals import principal_sqrt

__all__ = [
    "Affine",
    "Curve",
    "INFINITY",
    "Infinity",
    "Point",
    "Tolerance",
    "add",
    "contains",
    "double",
    "multiply",
    "negate",
    "order_of",
    "same_point",
    "y_from_x",
]


class Infinity:
    """The identity element.  Use the :data:`INFINITY` singleton."""

    _instance: Optional["Infinity"] = None
    is_infinity = True

    def __new__(cls) -> "Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __reduce__(self):
        return (Infinity, ())


INFINITY = Infinity()


@dataclass(frozen=True)
class Affine:
    x: complex
    y: complex
    is_infinity = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", complex(self.x))
        object.__setattr__(self, "y", complex(self.y))


Point = Union[Affine, Infinity]


@dataclass(frozen=True)
class Curve:
    """Nonsingular curve given by the three roots of its cubic."""

    e1: complex
    e2: complex
    e3: complex

    def __post_init__(self) -> None:
        for name in ("e1", "e2", "e3"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        if self.e1 == self.e2 or self.e1 == self.e3 or self.e2 == self.e3:
            raise DegenerateCurve(
                f"roots must be pairwise distinct, got {self.e1}, {self.e2}, {self.e3}"
            )

    @property
    def roots(self) -> tuple[complex, complex, complex]:
        return (self.e1, self.e2, self.e3)

    @property
    def root_sum(self) -> complex:
        return self.e1 + self.e2 + self.e3

    def rhs(self, x: complex) -> complex:
        return 4 * (x - self.e1) * (x - self.e2) * (x - self.e3)

    def rhs_derivative(self, x: complex) -> complex:
        a, b, c = x - self.e1, x - self.e2, x - self.e3
        return 4 * (b * c + a * c + a * b)


@dataclass(frozen=True)
class Tolerance:
    """Relative comparison policy.

    Coordinates are compared at ``rel * S`` and curve residuals at
    ``rel * S**3`` where ``S = max(1, |e1|, |e2|, |e3|, |x|, ...)``.
    """

    rel: float = 1e-9

    def __post_init__(self) -> None:
        if not self.rel > 0:
            raise ValueError(f"tolerance must be positive, got {self.rel}")

    def scale(self, curve: Curve, *xs: complex) -> float:
        return max(1.0, *(abs(e) for e in curve.roots), *(abs(x) for x in xs))

    def coord(self, curve: Curve, *xs: complex) -> float:
        return self.rel * self.scale(curve, *xs)

    def residual(self, curve: Curve, x: complex) -> float:
        return self.rel * self.scale(curve, x) ** 3


DEFAULT_TOL = Tolerance()


def contains(curve: Curve, p: Point, tol: Tolerance = DEFAULT_TOL) -> bool:
    if p.is_infinity:
        return True
    return abs(p.y * p.y - curve.rhs(p.x)) <= tol.residual(curve, p.x)


def _require_on(curve: Curve, p: Point, tol: Tolerance) -> None:
    if not contains(curve, p, tol):
        residual = abs(p.y * p.y - curve.rhs(p.x))
        raise OffCurve(f"{p} is not on the curve (residual {residual:.3g})")


def negate(p: Point) -> Point:
    if p.is_infinity:
        return p
    return Affine(p.x, -p.y)


def same_point(curve: Curve, p: Point, q: Point, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Coordinate-wise equality within ``tol``; INFINITY only equals itself."""
    if p.is_infinity or q.is_infinity:
        return p.is_infinity and q.is_infinity
    bound = tol.coord(curve, p.x, q.x)
    return abs(p.x - q.x) <= bound and abs(p.y - q.y) <= bound


def _third_point(curve: Curve, lam: complex, x1: complex, x2: complex, y1: complex) -> Affine:
    x3 = lam * lam / 4 + curve.root_sum - x1 - x2
    return Affine(x3, -(lam * (x3 - x1) + y1))


def _double(curve: Curve, p: Point, tol: Tolerance) -> Point:
    if p.is_infinity or 2 * abs(p.y) <= tol.coord(curve, p.x):
        return INFINITY
    lam = curve.rhs_derivative(p.x) / (2 * p.y)
    return _third_point(curve, lam, p.x, p.x, p.y)


def _add(curve: Curve, p: Point, q: Point, tol: Tolerance) -> Point:
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    bound = tol.coord(curve, p.x, q.x)
    if abs(p.x - q.x) <= bound:
        if abs(p.y + q.y) <= bound:
            return INFINITY
        if abs(p.y - q.y) <= bound:
            return _double(curve, p, tol)
        raise OffCurve(f"inconsistent addends {p} and {q}: equal x, unrelated y")
    lam = (q.y - p.y) / (q.x - p.x)
    return _third_point(curve, lam, p.x, q.x, p.y)


def add(curve: Curve, p: Point, q: Point, tol: Tolerance = DEFAULT_TOL) -> Point:
    """Group sum ``p + q``.

    Addends whose x-coordinates agree within tolerance are treated as a
    vertical chord (sum is INFINITY) when their y-coordinates are opposite and
    as a doubling when they are equal.

    Raises:
        OffCurve: an addend is not on the curve, or the addends share x but
            their y-coordinates are neither equal nor opposite.
    """
    _require_on(curve, p, tol)
    _require_on(curve, q, tol)
    return _add(curve, p, q, tol)


def double(curve: Curve, p: Point, tol: Tolerance = DEFAULT_TOL) -> Point:
    """Tangent-line doubling; 2-torsion points (``y`` within tolerance of 0)
    double to INFINITY."""
    _require_on(curve, p, tol)
    return _double(curve, p, tol)


def multiply(curve: Curve, k: int, p: Point, tol: Tolerance = DEFAULT_TOL) -> Point:
    """``k * p`` for ``k >= 0`` by left-to-right double-and-add."""
    if k < 0:
        raise ValueError(f"scalar must be non-negative, got {k}")
    _require_on(curve, p, tol)
    result: Point = INFINITY
    for bit in bin(k)[2:]:
        result = _double(curve, result, tol)
        if bit == "1":
            result = _add(curve, result, p, tol)
    return result


def order_of(
    curve: Curve, p: Point, max_order: int = 16, tol: Tolerance = DEFAULT_TOL
) -> Optional[int]:
    """Smallest ``n <= max_order`` with ``n * p`` equal to INFINITY, else None.

    Multiples are accumulated one addition at a time so the vertical-chord
    test sees every intermediate point.
    """
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    _require_on(curve, p, tol)
    if p.is_infinity:
        return 1
    acc: Point = p
    for n in range(2, max_order + 1):
        acc = _add(curve, acc, p, tol)
        if acc.is_infinity:
            return n
    return None


def y_from_x(curve: Curve, x: complex, branch: int = 1) -> complex:
    """``branch * sqrt(4(x-e1)(x-e2)(x-e3))`` on the principal branch."""
    if branch not in (1, -1):
        raise ValueError(f"branch must be +1 or -1, got {branch}")
    return branch * principal_sqrt(curve.rhs(complex(x)))
