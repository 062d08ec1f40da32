"""Two-dimensional two-sample Kolmogorov-Smirnov tests.

The Fasano-Franceschini statistic with analytic and bootstrap p-values,
Peacock's all-pairs statistic, and the 1-D Kolmogorov distribution.
"""

from .bootstrap import BootstrapConfig, BootstrapResult, bootstrap_pvalue, resample_null
from .ff2d import (
    FfStatistic,
    QuadrantFractions,
    TestOutcome,
    analytic_pvalue,
    d_one_direction,
    ff_statistic,
    ff_test,
    pearson_r,
    quadrant_fractions,
)
from .kolmogorov import (
    ks1d_statistic,
    ks_survival,
    pvalue_1d_one_sample,
    pvalue_1d_two_sample,
)
from .peacock import PeacockStatistic, peacock_statistic
from .samples import Point2D, Sample2D, SampleError, load_csv, save_csv, validate

__version__ = "0.1.0"
