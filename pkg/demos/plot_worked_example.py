"""
The order-8 point on y^2 = 4(x - i) x (x + i)
=============================================

Build the point from the roots, then walk through its multiples.
"""

from torsion8 import Curve, order8_point, torsion_radicals, verify_order8

curve = Curve(1j, 0, -1j)

# The radicals the construction is assembled from.  With the principal
# branch, beta = sqrt(2) and gamma = i sqrt(2).
r = torsion_radicals(curve)
print("beta  =", r.beta)
print("gamma =", r.gamma)
print("beta1 =", r.beta1)
print("beta2 =", r.beta2)

# x(P) should be sqrt(2) - 1 - i sqrt(2 (sqrt(2) - 1)) ~ 0.41421 - 0.91018i
P = order8_point(curve)
print("P =", P)

# Successive multiples.  4P lands on (e2, 0) = (0, 0), 8P is the identity.
report = verify_order8(curve)
for k, kP in report.multiples:
    print(f"{k}P = {kP}")

# Note that 2P comes out as (-1, +-2 sqrt(2) i): doubling depends on x(P)
# alone, and f'(x)^2 / (16 f(x)) - 2x evaluates to -1 there.
print("order (group law):", report.verified_order)
print("4P == (e2, 0):", report.four_p_is_e2)
print("division polynomials agree:", report.oracle_confirms)
