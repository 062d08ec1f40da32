"""Runtime benchmarks for the 2-D tests across sample sizes."""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, field

import numpy as np

from .bootstrap import BootstrapConfig, bootstrap_pvalue, stream
from .ff2d import ff_test
from .peacock import peacock_statistic
from .samples import Sample2D

__all__ = ["BENCH_TESTS", "BenchReport", "BenchRow", "normal_sample", "run_bench"]

BENCH_TESTS = ("ff", "peacock", "ff-bootstrap")


@dataclass(frozen=True)
class BenchRow:
    test: str
    n: int
    replicates: int
    workers: int
    mean_seconds: float


@dataclass
class BenchReport:
    rows: list = field(default_factory=list)

    def mean(self, test: str, n: int) -> float:
        for row in self.rows:
            if row.test == test and row.n == n:
                return row.mean_seconds
        raise KeyError((test, n))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["test", "n", "replicates", "workers", "mean_seconds"])
        for r in self.rows:
            w.writerow([r.test, r.n, r.replicates, r.workers, f"{r.mean_seconds:.4g}"])
        return buf.getvalue()


def normal_sample(rng: np.random.Generator, n: int, label: str = "sample") -> Sample2D:
    """`n` independent standard bivariate normal points."""
    z = rng.standard_normal((n, 2))
    return Sample2D(z[:, 0], z[:, 1], label=label)


def _timed(test, s1, s2, n_bootstrap, workers, seed):
    t0 = time.perf_counter()
    if test == "ff":
        ff_test(s1, s2)
    elif test == "peacock":
        peacock_statistic(s1, s2)
    else:
        bootstrap_pvalue(s1, s2, BootstrapConfig(n_bootstrap, seed, workers))
    return time.perf_counter() - t0


def run_bench(
    tests=("ff", "peacock"),
    sizes=(10, 100, 1000),
    replicates: int = 10,
    n_bootstrap: int = 100,
    workers: int = 1,
    seed: int = 0,
) -> BenchReport:
    """Mean wall-clock time of each test at each sample size.

    Data for every (test, n) pair come from a generator keyed on `seed`
    and the pair's position, so reruns time identical inputs.
    """
    unknown = [t for t in tests if t not in BENCH_TESTS]
    if unknown:
        raise ValueError(f"unknown test(s): {', '.join(unknown)}")
    if replicates < 1:
        raise ValueError("replicates must be >= 1")
    report = BenchReport()
    for ti, test in enumerate(tests):
        for si, n in enumerate(sizes):
            rng = stream(seed, ti * 1_000_003 + si)
            s1, s2 = normal_sample(rng, n, "s1"), normal_sample(rng, n, "s2")
            w = workers if test == "ff-bootstrap" else 1
            times = [_timed(test, s1, s2, n_bootstrap, w, seed) for _ in range(replicates)]
            report.rows.append(BenchRow(test, n, replicates, w, float(np.mean(times))))
    return report
