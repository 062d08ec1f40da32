"""Peacock's all-pairs two-sample 2-D KS statistic.

Every pairing of a pooled x coordinate with a pooled y coordinate is
used as a corner, and the four closed quadrants at that corner are
probed. This is the cubic-cost baseline against which the
Fasano-Franceschini statistic is compared.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .samples import SampleLike, as_sample, validate

__all__ = ["PeacockStatistic", "peacock_statistic"]

_BLOCK = 1 << 22


@dataclass(frozen=True)
class PeacockStatistic:
    d: float


def peacock_statistic(s1: SampleLike, s2: SampleLike) -> PeacockStatistic:
    """Maximum quadrant-fraction difference over the full coordinate grid.

    Regions use closed inequalities; no tie splitting is applied.
    """
    s1, s2 = as_sample(s1, "s1"), as_sample(s2, "s2")
    validate(s1)
    validate(s2)
    n1, n2 = len(s1), len(s2)
    px = np.concatenate([s1.x, s2.x])
    py = np.concatenate([s1.y, s2.y])
    # integer weights n2, -n1 make one product equal n1*n2*(F1 - F2), exactly
    w = np.concatenate([np.full(n1, float(n2)), np.full(n2, -float(n1))])
    below = (py[None, :] <= py[:, None]).astype(np.float64)  # [j, p]: y_p <= Y_j
    above = (py[None, :] >= py[:, None]).astype(np.float64)
    k = px.size
    best = 0.0
    step = max(1, _BLOCK // k)
    for lo in range(0, k, step):
        gx = px[lo:lo + step, None]
        left = (px[None, :] <= gx) * w
        right = (px[None, :] >= gx) * w
        for xs in (left, right):
            for ys in (below, above):
                best = max(best, float(np.abs(xs @ ys.T).max()))
    return PeacockStatistic(d=best / (n1 * n2))
