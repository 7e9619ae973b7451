"""
Chord and tangent on the factored cubic
=======================================

The curve keeps the leading 4 of y^2 = 4(x-e1)(x-e2)(x-e3).  Points are
added directly in these coordinates.
"""

from torsion8 import INFINITY, Curve, add, double, multiply, negate, order_of, y_from_x
from torsion8.curve import Affine

curve = Curve(2 + 1j, -1, 0.5 - 3j)


def point(x):
    return Affine(x, y_from_x(curve, x))


P, Q, R = point(0.3 + 0.2j), point(-1.5 + 2j), point(4 - 1j)

# identity, inverse, commutativity
print(add(curve, P, INFINITY) == P)
print(add(curve, P, negate(P)))
print(add(curve, P, Q))
print(add(curve, Q, P))

# associativity holds up to rounding
lhs = add(curve, add(curve, P, Q), R)
rhs = add(curve, P, add(curve, Q, R))
print("associativity gap:", abs(lhs.x - rhs.x), abs(lhs.y - rhs.y))

# doubling and scalar multiples
print(double(curve, P))
print(multiply(curve, 5, P))

# points (e_i, 0) have order 2; a random point has no small order
print([order_of(curve, Affine(e, 0)) for e in curve.roots])
print(order_of(curve, P))
