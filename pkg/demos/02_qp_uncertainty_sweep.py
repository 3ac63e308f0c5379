#!/usr/bin/env python3
"""From a convex QP to a robust complementarity certificate.

The optimality conditions of

    min  x^T C x + d^T x   s.t.  B x <= b,  x >= 0

form a complementarity problem with block matrix A = [[0, -B], [B^T, 2C]].
We convert one concrete QP, solve its complementarity problem exactly by
basis enumeration, then sweep growing uncertainty in B and C and watch the
robust classes drop out one by one.
"""

import numpy as np

import lcpbox as lb

qp = lb.QpInstance(
    C=[[10.0, 4.0], [4.0, 5.0]],
    d=[1.0, 1.0],
    B=[[2.0, -1.0], [-3.0, 1.0]],
    b=[10.0, 9.0],
)

inst = lb.qp_to_lcp(qp)
print("converted matrix A:")
print(inst.A)
print("q =", inst.q)
print()

solutions = lb.solve_lcp_enumerate(inst)
print(f"complementary solutions for q = {inst.q.tolist()}: {len(solutions)}")
for sol in solutions:
    print(f"  z = {sol.z}, y = {sol.y}  (q > 0, so z = 0 is the unique one)")
print()

TRACKED = ("semimonotone", "column-sufficient", "r", "r0")
absB, absC = np.abs(qp.B), np.abs(np.asarray(qp.C))

sweeps = [
    (0.0, 1 / 4), (0.0, 1 / 3), (0.0, 9 / 10), (0.0, 1.0),
    (1 / 10, 1 / 10), (1 / 10, 1 / 5), (1 / 10, 1 / 2), (1 / 5, 1 / 5),
]

print(f"{'rad B':>8} {'rad C':>8}   robust classes")
for fb, fc in sweeps:
    box = lb.qp_to_interval_lcp(qp, fb * absB, fc * absC)
    holding = [t for t in TRACKED if lb.check_property(box, t).holds]
    label = ", ".join(holding) if holding else "(none)"
    print(f"{fb:>7.0%} {fc:>8.0%}   {label}")

print()
print("Uncertainty confined to the cost matrix C is tolerated up to 25%")
print("without losing any tracked class; joint 20% variation in both")
print("blocks destroys all of them.")
