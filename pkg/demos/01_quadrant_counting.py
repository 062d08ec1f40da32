# How the 2-D statistic is built from quadrant fractions, including ties.
import numpy as np

from kstest2d import d_one_direction, ff_statistic, peacock_statistic, quadrant_fractions

# A point strictly inside a quadrant counts fully there.
print(quadrant_fractions((0, 0), [(1, 1)]))

# Points on an axis through the origin are split between the two
# neighbouring quadrants, and the origin itself is split four ways.
print(quadrant_fractions((0, 0), [(0, 1), (1, 0)]))
print(quadrant_fractions((0, 0), [(0, 0)]))

# The statistic takes every point of one sample as an origin, finds the
# quadrant where the samples' fractions differ most, then repeats with
# the other sample's points and averages the two maxima.
s1 = [(0, 0), (1, 1)]
s2 = [(0, 1), (1, 0)]
print("origins from s1:", d_one_direction(s1, s1, s2))
print("origins from s2:", d_one_direction(s2, s1, s2))
print(ff_statistic(s1, s2))

# Peacock's variant probes every (x_i, y_j) combination instead.
print(peacock_statistic(s1, s2))

# Both statistics only depend on ranks: monotone maps leave them unchanged.
rng = np.random.default_rng(1)
a, b = rng.normal(size=(40, 2)), rng.normal(0.3, 1, size=(40, 2))
warp = lambda s: np.column_stack([np.exp(s[:, 0]), np.arctan(s[:, 1])])
print(ff_statistic(a, b).d, ff_statistic(warp(a), warp(b)).d)
