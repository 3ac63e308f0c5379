import numpy as np
import pytest

import lcpbox as lb
from lcpbox.oracle import brute_copositive, falsify
from lcpbox.strong import PropertyVerdict
from conftest import TRACKED


class TestFalsify:
    def test_exhaustive_vertex_count(self):
        box = lb.from_midpoint_radius(np.eye(2), 0.4 * np.ones((2, 2)))
        out = falsify(box, "principally-nondegenerate", budget=512, seed=0)
        assert out.verdict == "no-counterexample-in-budget"
        assert out.samples == 16  # 2^(2*2) endpoint vertices, exhaustive

    def test_counterexample_confirmed_and_contained(self, box3_15):
        out = falsify(box3_15, "semimonotone", budget=2000, seed=0)
        assert out.found
        A = out.counterexample["matrix"]
        assert box3_15.contains(A, tol=1e-12)
        assert not lb.is_semimonotone(A)

    def test_degenerate_identity_never_falsified(self):
        box = lb.degenerate(np.eye(2))
        for prop in TRACKED + ("s", "copositive", "p", "m"):
            out = falsify(box, prop, budget=64, seed=0)
            assert not out.found, prop

    def test_determinism(self):
        rng = np.random.default_rng(11)
        box = lb.from_midpoint_radius(rng.uniform(-1, 1, (4, 4)),
                                      rng.uniform(0, 0.5, (4, 4)))
        a = falsify(box, "column-sufficient", budget=300, seed=5)
        b = falsify(box, "column-sufficient", budget=300, seed=5)
        assert a.verdict == b.verdict and a.samples == b.samples
        if a.found:
            assert np.array_equal(a.counterexample["matrix"],
                                  b.counterexample["matrix"])

    def test_sampled_mode_tries_bounds_first(self):
        # 2^(n^2) = 2^16 exceeds the budget, so sampling kicks in; the lower
        # bound matrix is examined first and already fails semimonotonicity.
        box = lb.from_midpoint_radius(-np.eye(4), 0.1 * np.ones((4, 4)))
        out = falsify(box, "semimonotone", budget=100, seed=0)
        assert out.found and out.samples == 1

    def test_budget_validation(self, box3_10):
        with pytest.raises(ValueError):
            falsify(box3_10, "r0", budget=0)

    def test_unknown_property(self, box3_10):
        with pytest.raises(ValueError):
            falsify(box3_10, "definitely-not-a-class", budget=10)


class TestCrossValidate:
    def test_reference_box_consistent(self, box3_10):
        verdicts = [lb.check_property(box3_10, p) for p in TRACKED]
        report = lb.cross_validate(box3_10, verdicts, budget=2000, seed=0)
        assert report.consistent
        assert all(e.status == "consistent" for e in report.entries)

    def test_failed_verdicts_confirmed_or_unconfirmed(self, box3_15):
        verdicts = [lb.check_property(box3_15, p) for p in TRACKED]
        report = lb.cross_validate(box3_15, verdicts, budget=2000, seed=0)
        assert report.consistent
        assert all(e.status in ("confirmed", "unconfirmed") for e in report.entries)

    def test_fault_injection_flags_contradiction(self):
        # a strong-Z claim on a box whose upper bound has a positive
        # off-diagonal entry must be contradicted by the first vertex scan
        box = lb.from_bounds([[1, 0], [0, 1]], [[1, 0.5], [0, 1]])
        fake = PropertyVerdict(property="z", holds=True, method="forged",
                               certificate=None, elapsed=0.0)
        report = lb.cross_validate(box, [fake], budget=64, seed=0)
        assert not report.consistent
        assert report.entries[0].status == "contradiction"


class TestBruteCopositive:
    def test_known_cases(self):
        assert brute_copositive(np.eye(2)) is True
        assert brute_copositive([[1, -2], [-2, 1]]) is False
        assert brute_copositive(np.zeros((2, 2))) is True
        assert brute_copositive(np.zeros((2, 2)), strict=True) is False
        assert brute_copositive([[2, -1], [-1, 2]], strict=True) is True
