#!/usr/bin/env python3
"""Cross-examining the certifier with an independent falsifier.

The strong checkers certify via finite characterizations. The oracle takes
the opposite route: it walks realization matrices inside the box (endpoint
vertices exhaustively when they fit the budget) and tests the plain
point-level definition on each. A counterexample against a strong-True
verdict would be a hard bug; none ever appears, while failed verdicts are
frequently confirmed with an explicit realization.
"""

import numpy as np

import lcpbox as lb

mid = np.array([
    [0.0, -1.0, 2.0],
    [2.0, 0.0, -2.0],
    [-1.0, 1.0, 0.0],
])

for pct in (0.10, 0.15):
    box = lb.from_midpoint_radius(mid, pct * np.abs(mid))
    verdicts = [lb.check_property(box, t)
                for t in ("semimonotone", "column-sufficient", "r", "r0")]
    outcome = lb.cross_validate(box, verdicts, budget=2000, seed=0)
    print(f"--- uncertainty {pct:.0%} ---")
    for entry in outcome.entries:
        print(f"  {entry.property:20s} strong={str(entry.strong_holds):5s} "
              f"oracle={entry.status:12s} ({entry.samples} realizations)")
    print()

box15 = lb.from_midpoint_radius(mid, 0.15 * np.abs(mid))
hit = lb.falsify(box15, "semimonotone", budget=2000, seed=0)
print("a concrete realization violating semimonotonicity at 15%:")
print(np.asarray(hit.counterexample["matrix"]))
print("verified not semimonotone:", not lb.is_semimonotone(hit.counterexample["matrix"]))
