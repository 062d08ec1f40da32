"""Fasano-Franceschini two-sample statistic and its analytic p-value.

Quadrants around an origin ``(X, Y)`` are labelled by the sign of
``x - X`` then ``y - Y``::

    q_mp | q_pp
    -----+-----
    q_mm | q_pm

A point sharing one coordinate with the origin is split half/half
between the two quadrants it borders; a point coinciding with the
origin contributes a quarter to each. Ties are exact float equality.
"""

from __future__ import annotations

import math
import time
import warnings
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .kolmogorov import ks_survival
from .samples import Point2D, Sample2D, SampleLike, as_sample, validate

__all__ = [
    "DegenerateCorrelationWarning",
    "FfStatistic",
    "QuadrantFractions",
    "TestOutcome",
    "analytic_pvalue",
    "d_one_direction",
    "ff_statistic",
    "ff_test",
    "pearson_r",
    "quadrant_fractions",
]

# elements per (origins x points) block, bounds temporary memory
_BLOCK = 1 << 22


class DegenerateCorrelationWarning(UserWarning):
    pass


@dataclass(frozen=True)
class QuadrantFractions:
    q_pp: float
    q_pm: float
    q_mp: float
    q_mm: float

    def as_tuple(self):
        return (self.q_pp, self.q_pm, self.q_mp, self.q_mm)


@dataclass(frozen=True)
class FfStatistic:
    d1: float
    d2: float
    d: float


@dataclass
class TestOutcome:
    """Result of a two-sample 2-D KS test."""

    __test__ = False  # keep pytest from collecting this class

    statistic: FfStatistic
    p_value: float
    method: str
    n1: int
    n2: int
    r1: float
    r2: float
    runtime_seconds: float = 0.0
    degenerate_r: bool = False
    seed: Optional[int] = None
    n_bootstrap: Optional[int] = None
    null_statistics: Optional[np.ndarray] = field(default=None, repr=False)

    @property
    def d(self) -> float:
        return self.statistic.d


def _quadrant_counts(ox, oy, px, py) -> np.ndarray:
    """Fractional quadrant counts of points (px, py) for each origin.

    Returns an array of shape (len(ox), 4) with columns pp, pm, mp, mm.
    """
    m, k = ox.size, px.size
    out = np.empty((m, 4))
    step = max(1, _BLOCK // max(k, 1))
    for lo in range(0, m, step):
        hi = min(m, lo + step)
        # weight of each point on the "x > X" side: 1, 1/2 on ties, else 0
        wx = (px > ox[lo:hi, None]) + 0.5 * (px == ox[lo:hi, None])
        wy = (py > oy[lo:hi, None]) + 0.5 * (py == oy[lo:hi, None])
        sx = wx.sum(axis=1)
        sy = wy.sum(axis=1)
        pp = np.einsum("ij,ij->i", wx, wy)
        out[lo:hi, 0] = pp
        out[lo:hi, 1] = sx - pp
        out[lo:hi, 2] = sy - pp
        out[lo:hi, 3] = k - sx - sy + pp
    return out


def quadrant_fractions(origin, s: SampleLike) -> QuadrantFractions:
    """Fraction of `s` falling in each quadrant around `origin`."""
    s = as_sample(s)
    validate(s)
    o = Point2D(*origin)
    c = _quadrant_counts(
        np.array([o.x], dtype=float), np.array([o.y], dtype=float), s.x, s.y
    )[0] / len(s)
    return QuadrantFractions(*map(float, c))


def d_one_direction(origins: SampleLike, s1: SampleLike, s2: SampleLike) -> float:
    """Largest quadrant-fraction difference between `s1` and `s2`,
    maximised over all four quadrants of every point in `origins`."""
    origins, s1, s2 = as_sample(origins), as_sample(s1), as_sample(s2)
    for s in (origins, s1, s2):
        validate(s)
    f1 = _quadrant_counts(origins.x, origins.y, s1.x, s1.y) / len(s1)
    f2 = _quadrant_counts(origins.x, origins.y, s2.x, s2.y) / len(s2)
    return float(np.max(np.abs(f1 - f2)))


def ff_statistic(s1: SampleLike, s2: SampleLike) -> FfStatistic:
    """Fasano-Franceschini statistic: the mean of the two one-direction
    maxima, with origins taken from `s1` and from `s2` respectively."""
    s1, s2 = as_sample(s1, "s1"), as_sample(s2, "s2")
    d1 = d_one_direction(s1, s1, s2)
    d2 = d_one_direction(s2, s1, s2)
    return FfStatistic(d1=d1, d2=d2, d=(d1 + d2) / 2)


def _correlation(s: Sample2D) -> tuple[float, bool]:
    if len(s) < 2:
        raise ValueError("correlation needs at least 2 points")
    dx = s.x - s.x.mean()
    dy = s.y - s.y.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    if sxx == 0.0 or syy == 0.0:
        return 0.0, True
    r = float(dx @ dy) / (math.sqrt(sxx) * math.sqrt(syy))
    return min(1.0, max(-1.0, r)), False


def pearson_r(s: SampleLike) -> float:
    """Pearson correlation of x and y within one sample.

    Returns 0 (and warns) when either coordinate has zero variance.
    """
    s = as_sample(s)
    validate(s)
    r, degenerate = _correlation(s)
    if degenerate:
        warnings.warn(
            f"{s.label}: zero variance in a coordinate, using r = 0",
            DegenerateCorrelationWarning,
            stacklevel=2,
        )
    return r


def analytic_pvalue(d: float, n1: int, n2: int, r1: float, r2: float) -> float:
    """Approximate p-value of the 2-D statistic from the Kolmogorov
    distribution with a correlation-dependent rescaling.

    The two samples' correlations enter through ``r**2 = (r1**2 + r2**2) / 2``
    and the size through ``n = n1 * n2 / (n1 + n2)``.
    """
    if not 0.0 <= d <= 1.0:
        raise ValueError(f"statistic must lie in [0, 1], got {d}")
    if n1 < 1 or n2 < 1:
        raise ValueError(f"sample sizes must be >= 1, got {n1}, {n2}")
    for r in (r1, r2):
        if not -1.0 <= r <= 1.0:
            raise ValueError(f"correlation must lie in [-1, 1], got {r}")
    n = n1 * n2 / (n1 + n2)
    r2_mean = (r1 * r1 + r2 * r2) / 2
    sqrt_n = math.sqrt(n)
    denom = 1.0 + math.sqrt(max(0.0, 1.0 - r2_mean)) * (0.25 - 0.75 / sqrt_n)
    return ks_survival(d * sqrt_n / denom)


def ff_test(
    s1: SampleLike,
    s2: SampleLike,
    method: str = "analytic",
    n_bootstrap: int = 1000,
    seed: int = 42,
    workers: int = 1,
) -> TestOutcome:
    """Two-sample 2-D Kolmogorov-Smirnov test (Fasano-Franceschini).

    Parameters
    ----------
    s1, s2 : Sample2D or array_like of shape (n, 2)
        The samples; each needs at least 2 points.
    method : {"analytic", "bootstrap"}
        Analytic approximation, or a bootstrap null built by resampling
        the pooled points.
    n_bootstrap, seed, workers
        Bootstrap settings, ignored for the analytic method.

    Returns
    -------
    TestOutcome
    """
    start = time.perf_counter()
    s1, s2 = as_sample(s1, "s1"), as_sample(s2, "s2")
    validate(s1)
    validate(s2)
    if method not in ("analytic", "bootstrap"):
        raise ValueError(f"unknown method {method!r}")
    r1, deg1 = _correlation(s1)
    r2, deg2 = _correlation(s2)
    if deg1 or deg2:
        warnings.warn(
            "zero variance in a coordinate, r taken as 0; "
            "the bootstrap method is more reliable here",
            DegenerateCorrelationWarning,
            stacklevel=2,
        )

    extra = {}
    if method == "analytic":
        stat = ff_statistic(s1, s2)
        p = analytic_pvalue(stat.d, len(s1), len(s2), r1, r2)
    else:
        from .bootstrap import BootstrapConfig, bootstrap_pvalue

        cfg = BootstrapConfig(n_bootstrap=n_bootstrap, master_seed=seed, workers=workers)
        res = bootstrap_pvalue(s1, s2, cfg)
        stat, p = res.statistic, res.p_value
        extra = dict(seed=seed, n_bootstrap=n_bootstrap, null_statistics=res.null_statistics)

    return TestOutcome(
        statistic=stat,
        p_value=p,
        method=method,
        n1=len(s1),
        n2=len(s2),
        r1=r1,
        r2=r2,
        runtime_seconds=time.perf_counter() - start,
        degenerate_r=deg1 or deg2,
        **extra,
    )
