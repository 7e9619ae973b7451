"""Principal complex square roots and the radicals built from the roots.

Every square root in the package goes through :func:`principal_sqrt`, which
fixes one branch: the cut runs along the negative real axis and points on the
cut map to the positive imaginary axis.  With that convention the curve
``y**2 = 4(x - i)x(x + i)`` gives ``gamma = i*sqrt(2)`` and ``beta = sqrt(2)``.
"""

from __future__ import annotations

import cmath
import warnings
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .exceptions import BetaAssumptionWarning, DegenerateCurve, InvalidBeta

if TYPE_CHECKING:
    from .curve import Curve

__all__ = [
    "TorsionRadicals",
    "beta_gamma",
    "beta_invariants",
    "beta_is_real_above_one",
    "principal_sqrt",
    "torsion_radicals",
]


def principal_sqrt(z: complex) -> complex:
    """Square root with ``Re(w) > 0``, or ``Re(w) == 0`` and ``Im(w) >= 0``.

    A negative-zero imaginary part is treated as ``+0`` so that ``-2`` and
    ``complex(-2, -0.0)`` both give ``i*sqrt(2)``.
    """
    z = complex(z)
    if z.imag == 0.0:
        z = complex(z.real, 0.0)
    w = cmath.sqrt(z)
    if w.real == 0.0:
        # cmath may hand back -0.0 for the real part on the cut
        w = complex(0.0, abs(w.imag))
    return w


@dataclass(frozen=True)
class TorsionRadicals:
    beta: complex
    gamma: complex
    beta1: complex
    beta2: complex


def beta_gamma(curve: Curve) -> tuple[complex, complex]:
    """Return ``(beta, gamma)`` with ``beta**2 = (e1-e3)/(e1-e2)`` and
    ``gamma**2 = (e1-e3)(e1-e2)``."""
    d12 = curve.e1 - curve.e2
    d13 = curve.e1 - curve.e3
    if d12 == 0 or d13 == 0 or curve.e2 == curve.e3:
        raise DegenerateCurve(f"roots are not pairwise distinct: {curve.roots}")
    return principal_sqrt(d13 / d12), principal_sqrt(d13 * d12)


def beta_is_real_above_one(beta: complex, rel: float = 1e-9) -> bool:
    beta = complex(beta)
    return abs(beta.imag) <= rel * abs(beta) and beta.real > 1.0


def beta_invariants(beta: complex, warn: bool = True) -> tuple[complex, complex]:
    """Compute ``(beta1, beta2)`` from ``beta``.

    ``beta1 = sqrt((beta+1)/(beta-1)) + sqrt(2/(beta-1))`` and
    ``beta2 = sqrt(2/(beta+1)) + 1/beta``.  The construction is meant for real
    ``beta > 1``; other values are still evaluated on the principal branch and
    a :class:`BetaAssumptionWarning` is issued when ``warn`` is set.

    Raises:
        InvalidBeta: ``beta`` is 0, 1 or -1.
    """
    beta = complex(beta)
    if beta in (0, 1, -1):
        raise InvalidBeta(f"beta = {beta} is a pole of the order-8 construction")
    if warn and not beta_is_real_above_one(beta):
        warnings.warn(
            f"beta = {beta} is not a real number > 1; results are unchecked",
            BetaAssumptionWarning,
            stacklevel=2,
        )
    beta1 = principal_sqrt((beta + 1) / (beta - 1)) + principal_sqrt(2 / (beta - 1))
    beta2 = principal_sqrt(2 / (beta + 1)) + 1 / beta
    return beta1, beta2


def torsion_radicals(curve: Curve, warn: bool = True) -> TorsionRadicals:
    beta, gamma = beta_gamma(curve)
    beta1, beta2 = beta_invariants(beta, warn=warn)
    return TorsionRadicals(beta, gamma, beta1, beta2)
