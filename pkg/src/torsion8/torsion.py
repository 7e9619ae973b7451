"""Explicit torsion points of orders 2, 4 and 8.

The order-8 abscissa is assembled from the radicals of
:mod:`torsion8.radicals`::

    x = e1 - gamma - gamma * (sqrt((beta+1)/2) - 1) * W
    W = 1 - 1/beta + sqrt(1 + 1/beta) * (sqrt(beta1 + beta2)
          + i * (sqrt(beta1 - beta2) + sqrt(1 - 1/beta)))

For real ``beta > 1`` the point ``P`` satisfies ``4P = (e2, 0)``: the two other
2-torsion points are halved by the order-4 points with ``x = e1 +- gamma``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Optional

from .curve import (
    DEFAULT_TOL,
    Affine,
    Curve,
    Point,
    Tolerance,
    _add,
    contains,
    order_of,
    same_point,
    y_from_x,
)
from .division import is_order_exactly_8
from .exceptions import BetaAssumptionWarning, OffCurve
from .normalize import map_point, to_short
from .radicals import (
    TorsionRadicals,
    beta_is_real_above_one,
    principal_sqrt,
    torsion_radicals,
)

__all__ = [
    "Order8Report",
    "order2_points",
    "order4_points",
    "order8_point",
    "order8_x",
    "verify_order8",
]


def order2_points(curve: Curve) -> tuple[Affine, Affine, Affine]:
    return tuple(Affine(e, 0) for e in curve.roots)


def order4_points(curve: Curve) -> tuple[Affine, Affine, Affine, Affine]:
    """The two pairs ``(e1 + gamma, +-y)`` and ``(e1 - gamma, +-y)``.

    Doubling them gives ``(e1, 0)`` or ``(e3, 0)``, never ``(e2, 0)``.
    """
    gamma = principal_sqrt((curve.e1 - curve.e3) * (curve.e1 - curve.e2))
    points = []
    for x in (curve.e1 + gamma, curve.e1 - gamma):
        y = y_from_x(curve, x, 1)
        points.extend([Affine(x, y), Affine(x, -y)])
    return tuple(points)


def _order8_x(radicals: TorsionRadicals, e1: complex) -> complex:
    beta, gamma = radicals.beta, radicals.gamma
    b1, b2 = radicals.beta1, radicals.beta2
    inner = principal_sqrt(b1 + b2) + 1j * (
        principal_sqrt(b1 - b2) + principal_sqrt(1 - 1 / beta)
    )
    bracket = 1 - 1 / beta + principal_sqrt(1 + 1 / beta) * inner
    return e1 - gamma - gamma * (principal_sqrt((beta + 1) / 2) - 1) * bracket


def order8_x(curve: Curve, warn: bool = True) -> complex:
    return _order8_x(torsion_radicals(curve, warn=warn), curve.e1)


def order8_point(curve: Curve, branch: int = 1, warn: bool = True) -> Affine:
    """The order-8 point; ``branch`` picks the sign of ``y``.  Both signs give
    a point of order 8."""
    x = order8_x(curve, warn=warn)
    return Affine(x, y_from_x(curve, x, branch))


@dataclass(frozen=True)
class Order8Report:
    point: Point
    multiples: tuple[tuple[int, Point], ...]
    verified_order: Optional[int]
    four_p_is_e2: bool
    oracle_confirms: bool
    beta_assumption_met: bool
    radicals: TorsionRadicals
    branch: int = 1

    def multiple(self, k: int) -> Point:
        return self.multiples[k - 1][1]

    @property
    def passed(self) -> bool:
        return self.verified_order == 8 and self.four_p_is_e2 and self.oracle_confirms


def verify_order8(
    curve: Curve, tol: Tolerance = DEFAULT_TOL, branch: int = 1, max_order: int = 16
) -> Order8Report:
    """Build the order-8 point and check it by group law and by psi_n.

    ``verified_order`` comes from :func:`~torsion8.curve.order_of`,
    ``oracle_confirms`` from the division polynomials of the short model.
    A curve whose ``beta`` is not real and greater than one is still run; the
    report records that through ``beta_assumption_met``.
    """
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", BetaAssumptionWarning)
        radicals = torsion_radicals(curve)
    x = _order8_x(radicals, curve.e1)
    p = Affine(x, y_from_x(curve, x, branch))
    if not contains(curve, p, tol):
        raise OffCurve(f"constructed point {p} fails the membership test")

    multiples: list[tuple[int, Point]] = [(1, p)]
    acc: Point = p
    for k in range(2, 9):
        acc = _add(curve, acc, p, tol)
        multiples.append((k, acc))

    sw = to_short(curve)
    return Order8Report(
        point=p,
        multiples=tuple(multiples),
        verified_order=order_of(curve, p, max_order, tol),
        four_p_is_e2=same_point(curve, multiples[3][1], Affine(curve.e2, 0), tol),
        oracle_confirms=is_order_exactly_8(sw, map_point(sw, p, tol), tol),
        beta_assumption_met=beta_is_real_above_one(radicals.beta, tol.rel),
        radicals=radicals,
        branch=branch,
    )
