import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from kstest2d.bootstrap import (
    BootstrapConfig,
    BootstrapResult,
    bootstrap_pvalue,
    resample_null,
    splitmix64,
    stream,
)
from kstest2d.samples import Sample2D


def test_splitmix64_reference_vector():
    # first outputs of the reference SplitMix64 generator seeded with 0
    assert splitmix64(0, 0) == 0xE220A8397B1DCDAF
    assert splitmix64(0, 1) == 0x6E789E6AA1B965F4
    assert splitmix64(0, 2) == 0x06C45D188009454F


def test_streams_are_reproducible_and_distinct():
    a = stream(7, 3).random(5)
    assert np.array_equal(a, stream(7, 3).random(5))
    assert not np.array_equal(a, stream(7, 4).random(5))
    assert not np.array_equal(a, stream(8, 3).random(5))


def test_config_validation():
    with pytest.raises(ValueError):
        BootstrapConfig(n_bootstrap=0)
    with pytest.raises(ValueError):
        BootstrapConfig(workers=0)
    with pytest.raises(ValueError):
        BootstrapConfig(master_seed=-1)
    with pytest.raises(ValueError):
        BootstrapConfig(resample="columns")


def test_resample_single_atom():
    # n1 = n2 = 1 pools two copies of the one observed point
    pooled = Sample2D.from_points([(2.5, -1), (2.5, -1)])
    a, b = resample_null(pooled, 1, 1, stream(0, 0))
    assert a.points == b.points == [(2.5, -1.0)]


def test_resample_size_mismatch():
    with pytest.raises(ValueError):
        resample_null(Sample2D.from_points([(0, 0)]), 1, 1, stream(0, 0))


def test_resample_support_and_determinism(rng):
    pts = rng.normal(size=(12, 2))
    pooled = Sample2D(pts[:, 0], pts[:, 1])
    a, b = resample_null(pooled, 5, 7, stream(11, 0))
    assert (len(a), len(b)) == (5, 7)
    pairs = set(map(tuple, pts.tolist()))
    assert all(tuple(p) in pairs for p in a.points + b.points)
    a2, b2 = resample_null(pooled, 5, 7, stream(11, 0))
    assert a == a2 and b == b2


def test_identical_samples_give_p_one(rng):
    s = rng.normal(size=(15, 2))
    res = bootstrap_pvalue(s, s, BootstrapConfig(n_bootstrap=50, master_seed=3))
    assert isinstance(res, BootstrapResult)
    assert res.observed == 0 and res.p_value == 1.0
    assert np.all(res.null_statistics >= 0)


def test_separated_clouds_hit_floor(rng):
    s1 = rng.normal(size=(50, 2))
    s2 = rng.normal(size=(50, 2)) + 10
    res = bootstrap_pvalue(s1, s2, BootstrapConfig(n_bootstrap=999, master_seed=5))
    assert res.observed > 0.95
    assert res.p_value == 1 / 1000


def test_add_one_rule_and_range(rng):
    s1, s2 = rng.normal(size=(20, 2)), rng.normal(size=(25, 2)) + 0.3
    cfg = BootstrapConfig(n_bootstrap=200, master_seed=9)
    res = bootstrap_pvalue(s1, s2, cfg)
    assert res.null_statistics.shape == (200,)
    assert np.all((res.null_statistics >= 0) & (res.null_statistics <= 1))
    exceed = np.count_nonzero(res.null_statistics >= res.observed)
    assert res.p_value == (1 + exceed) / 201
    assert 1 / 201 <= res.p_value <= 1


def test_workers_do_not_change_result(rng):
    s1, s2 = rng.normal(size=(30, 2)), rng.normal(size=(30, 2))
    r1 = bootstrap_pvalue(s1, s2, BootstrapConfig(n_bootstrap=60, master_seed=1, workers=1))
    r2 = bootstrap_pvalue(s1, s2, BootstrapConfig(n_bootstrap=60, master_seed=1, workers=2))
    r3 = bootstrap_pvalue(s1, s2, BootstrapConfig(n_bootstrap=60, master_seed=1, workers=3))
    assert np.array_equal(r1.null_statistics, r2.null_statistics)
    assert np.array_equal(r1.null_statistics, r3.null_statistics)
    assert r1.p_value == r2.p_value == r3.p_value
    r4 = bootstrap_pvalue(s1, s2, BootstrapConfig(n_bootstrap=60, master_seed=2))
    assert not np.array_equal(r1.null_statistics, r4.null_statistics)


def test_marginal_mode_runs(rng):
    s1, s2 = rng.normal(size=(20, 2)), rng.normal(size=(20, 2))
    res = bootstrap_pvalue(s1, s2, BootstrapConfig(n_bootstrap=30, resample="marginal"))
    assert 1 / 31 <= res.p_value <= 1


@given(st.lists(st.floats(0, 1), min_size=1, max_size=50), st.floats(0, 1), st.floats(0, 1))
def test_pvalue_monotone_in_observed(null, lo, hi):
    # the estimator used by bootstrap_pvalue, applied to a fixed null sample
    lo, hi = sorted((lo, hi))
    null = np.array(null)
    p = lambda obs: (1 + np.count_nonzero(null >= obs)) / (null.size + 1)
    assert p(hi) <= p(lo)
    assert 1 / (null.size + 1) <= p(hi) <= 1


@pytest.mark.slow
def test_null_calibration():
    """Under the null, p > 0.05 in at least 90% of 100 trials."""
    big = 0
    for trial in range(100):
        g = stream(2024, trial)
        s1, s2 = g.standard_normal((100, 2)), g.standard_normal((100, 2))
        res = bootstrap_pvalue(s1, s2, BootstrapConfig(n_bootstrap=1000, master_seed=trial))
        big += res.p_value > 0.05
    assert big >= 90
