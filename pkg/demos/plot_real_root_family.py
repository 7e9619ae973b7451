"""
Real roots: which labeling works
================================

For real roots e3 < e2 < e1, beta is real and greater than one, and the
construction gives a point of order 8 with 4P = (e2, 0).  Reversing the
labels also gives a real beta > 1, but not an 8-torsion point.
"""

import random

from torsion8 import Curve, verify_order8

rng = random.Random(1)
curves = []
while len(curves) < 200:
    e = sorted(rng.uniform(-10, 10) for _ in range(3))
    if e[1] - e[0] >= 0.1 and e[2] - e[1] >= 0.1:
        curves.append(e)

descending = [verify_order8(Curve(e[2], e[1], e[0])) for e in curves]
ascending = [verify_order8(Curve(e[0], e[1], e[2])) for e in curves]

print("e1 > e2 > e3: order 8 in", sum(r.passed for r in descending), "of", len(curves))
print("e1 < e2 < e3: order 8 in", sum(r.passed for r in ascending), "of", len(curves))
print("beta real > 1 in both cases:",
      all(r.beta_assumption_met for r in descending + ascending))
