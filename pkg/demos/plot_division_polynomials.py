"""
Certifying orders with division polynomials
===========================================

Map each constructed point to the monic short model and see which psi_n
vanish.  The first vanishing index is the order.
"""

from torsion8 import (
    Curve,
    map_point,
    order2_points,
    order4_points,
    order8_point,
    order_of,
    psi_table,
    to_short,
)

curve = Curve(3, 1, 0)
sw = to_short(curve)
print(f"Y^2 = X^3 + ({sw.A})X + ({sw.B}),  x = X + {sw.shift}")

points = {
    "order 2": order2_points(curve)[1],
    "order 4": order4_points(curve)[0],
    "order 8": order8_point(curve),
}
for name, p in points.items():
    table = psi_table(sw, map_point(sw, p))
    zeros = [v.n for v in table if v.vanishes]
    print(f"{name}: psi_n vanishes for n in {zeros}; group law says {order_of(curve, p)}")

# |psi_n| relative to the size of the terms that produced it
for v in psi_table(sw, map_point(sw, points["order 8"]))[2:]:
    print(f"n={v.n:2d}  |psi|/scale = {abs(v.value) / v.scale:.2e}")
