"""Group law, explicit order-8 points and torsion certification for
``y**2 = 4(x - e1)(x - e2)(x - e3)`` over the complex numbers."""

from .curve import (
    INFINITY,
    Affine,
    Curve,
    Infinity,
    Point,
    Tolerance,
    add,
    contains,
    double,
    multiply,
    negate,
    order_of,
    same_point,
    y_from_x,
)
from .division import (
    PsiValue,
    is_order_exactly_8,
    oracle_order,
    psi,
    psi_table,
    torsion_profile,
)
from .exceptions import (
    BetaAssumptionWarning,
    DegenerateCurve,
    InvalidBeta,
    OffCurve,
    ParseError,
    Torsion8Error,
    UnsupportedIndex,
)
from .normalize import ShortWeierstrass, map_point, short_add, to_short, unmap_point
from .radicals import (
    TorsionRadicals,
    beta_gamma,
    beta_invariants,
    principal_sqrt,
    torsion_radicals,
)
from .torsion import (
    Order8Report,
    order2_points,
    order4_points,
    order8_point,
    order8_x,
    verify_order8,
)

__version__ = "0.1.0"
