#!/usr/bin/env python3
"""What the matrix classes buy you, demonstrated on tiny instances.

Complementarity problems at desk scale are solved exactly by enumerating
complementary support patterns. That makes the structural promises of the
matrix classes directly observable: R-matrices keep the problem solvable
for every right-hand side, column sufficient matrices keep solution sets
convex, R0-matrices keep them bounded.
"""

import numpy as np

import lcpbox as lb

print("identity matrix, q = (-1, -1): interior solution")
for sol in lb.solve_lcp_enumerate(lb.LcpInstance(np.eye(2), [-1, -1])):
    print(f"  z = {sol.z}, y = {sol.y}, basis = {sol.basis}")
print()

print("identity matrix, q = (1, 1): trivial solution (q > 0)")
for sol in lb.solve_lcp_enumerate(lb.LcpInstance(np.eye(2), [1, 1])):
    print(f"  z = {sol.z}, y = {sol.y}")
print()

A = np.array([[1.0, 1.0], [1.0, 1.0]])  # positive semidefinite, column sufficient
q = np.array([-1.0, -1.0])
sols = lb.solve_lcp_enumerate(lb.LcpInstance(A, q))
print("rank-one PSD matrix, q = (-1, -1): a whole segment of solutions")
for sol in sols:
    print(f"  z = {sol.z} (support {sol.basis})")
zmid = (sols[0].z + sols[1].z) / 2
y = A @ zmid + q
print(f"  midpoint of the two: z = {zmid}, y = {y}, y.z = {y @ zmid:.1e}")
print("  column sufficiency promises convexity; the midpoint is a solution too")
print()

rng = np.random.default_rng(0)
R_matrix = np.array([[2.0, -1.0], [-1.0, 2.0]])  # P-matrix, hence R
print("P-matrix: one solution for every right-hand side (20 random draws)")
counts = set()
for _ in range(20):
    q = rng.uniform(-5, 5, 2)
    counts.add(len(lb.solve_lcp_enumerate(lb.LcpInstance(R_matrix, q))))
print(f"  solution counts seen: {sorted(counts)}")
