"""Numerical robustness at adversarial scales.

The deciders classify with scale-relative tolerances and the LP encodings
normalize their homogeneous systems, so verdicts must be invariant under
positive rescaling across many orders of magnitude and every certificate
must survive re-verification even on badly scaled boxes.
"""

import numpy as np

import lcpbox as lb
from lcpbox.strong import ALL_STRONG_PROPERTIES

POINT_CHECKS = (
    lb.is_M,
    lb.is_M0,
    lb.is_Z,
    lambda A: lb.is_copositive(A),
    lambda A: lb.is_copositive(A, strict=True),
    lb.is_semimonotone,
    lb.is_column_sufficient,
    lb.is_R0,
    lb.is_R,
    lb.is_S,
)


def test_point_checks_survive_tiny_and_mixed_scales():
    rng = np.random.default_rng(0)
    for _ in range(400):
        n = int(rng.integers(1, 4))
        mag = 10.0 ** rng.uniform(-12, 1)
        A = rng.uniform(-mag, mag, (n, n))
        for check in POINT_CHECKS:
            check(A)  # must neither raise nor hit engine failures


def test_strong_checks_and_certificates_at_tiny_scales():
    rng = np.random.default_rng(1)
    for _ in range(120):
        n = int(rng.integers(1, 4))
        mag = 10.0 ** rng.uniform(-10, 1)
        mid = rng.uniform(-mag, mag, (n, n))
        rad = rng.uniform(0, mag / 2, (n, n))
        box = lb.from_midpoint_radius(mid, rad)
        for prop in ALL_STRONG_PROPERTIES:
            # check_property re-verifies certificates and raises on mismatch
            lb.check_property(box, prop)


def test_verdicts_invariant_across_twelve_decades():
    rng = np.random.default_rng(2)
    for _ in range(60):
        n = int(rng.integers(1, 4))
        A = rng.uniform(-2, 2, (n, n))
        base = [check(A) for check in POINT_CHECKS]
        for lam in (1e-9, 1e-4, 1e5):
            assert [check(lam * A) for check in POINT_CHECKS] == base
