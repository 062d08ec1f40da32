"""Two-dimensional point samples: data model, CSV ingestion and validation."""

from __future__ import annotations

import csv
import math
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, NamedTuple, Union

import numpy as np

__all__ = [
    "Point2D",
    "Sample2D",
    "SampleError",
    "as_sample",
    "load_csv",
    "save_csv",
    "validate",
]


class SampleError(ValueError):
    """Raised for unreadable, empty or non-finite sample data."""


class Point2D(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True, eq=False)
class Sample2D:
    """An ordered, immutable collection of (x, y) observations.

    Coordinates are stored as two read-only float64 arrays. Duplicate
    points are allowed.
    """

    x: np.ndarray
    y: np.ndarray
    label: str = field(default="sample")

    def __post_init__(self):
        x = np.array(self.x, dtype=np.float64).ravel()
        y = np.array(self.y, dtype=np.float64).ravel()
        if x.shape != y.shape:
            raise SampleError(
                f"x and y must have equal length, got {x.size} and {y.size}"
            )
        x.flags.writeable = False
        y.flags.writeable = False
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def from_points(cls, points: Iterable, label: str = "sample") -> "Sample2D":
        pts = np.asarray(list(points), dtype=np.float64)
        if pts.size == 0:
            return cls(np.empty(0), np.empty(0), label)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise SampleError(f"expected (n, 2) points, got shape {pts.shape}")
        return cls(pts[:, 0], pts[:, 1], label)

    @property
    def points(self) -> list[Point2D]:
        return [Point2D(float(a), float(b)) for a, b in zip(self.x, self.y)]

    def as_array(self) -> np.ndarray:
        return np.column_stack([self.x, self.y])

    def __len__(self) -> int:
        return self.x.size

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other):
        if not isinstance(other, Sample2D):
            return NotImplemented
        return np.array_equal(self.x, other.x) and np.array_equal(self.y, other.y)

    def __repr__(self):
        return f"Sample2D(label={self.label!r}, n={len(self)})"


SampleLike = Union[Sample2D, np.ndarray, Iterable]


def as_sample(data: SampleLike, label: str = "sample") -> Sample2D:
    """Coerce a Sample2D, an (n, 2) array or a sequence of pairs."""
    if isinstance(data, Sample2D):
        return data
    return Sample2D.from_points(data, label=label)


def validate(s: Sample2D) -> None:
    """Raise SampleError unless `s` is non-empty with finite coordinates."""
    if len(s) == 0:
        raise SampleError(f"empty sample ({s.label})")
    bad = ~(np.isfinite(s.x) & np.isfinite(s.y))
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        raise SampleError(
            f"non-finite coordinate in {s.label} at index {i}: "
            f"({s.x[i]!r}, {s.y[i]!r})"
        )


def _parse_field(text: str, row: int) -> float:
    try:
        value = float(text.strip())
    except ValueError:
        raise SampleError(f"row {row}: non-numeric field {text!r}") from None
    if not math.isfinite(value):
        raise SampleError(f"row {row}: non-finite field {text!r}")
    return value


def load_csv(path, has_header: bool = False, label: str | None = None) -> Sample2D:
    """Read a sample from a comma-separated file.

    The first two fields of each row are taken as x and y. Extra columns
    are ignored (with a warning) and blank lines are skipped. Row numbers
    in error messages are 1-based and count the header row.
    """
    path = Path(path)
    if not path.is_file():
        raise SampleError(f"no such file: {path}")
    xs, ys = [], []
    extra_cols = False
    with path.open(newline="", encoding="utf-8") as fh:
        for row_no, row in enumerate(csv.reader(fh), start=1):
            if has_header and row_no == 1:
                continue
            if not row or all(not f.strip() for f in row):
                continue
            if len(row) < 2:
                raise SampleError(f"row {row_no}: expected at least 2 fields")
            extra_cols |= len(row) > 2
            xs.append(_parse_field(row[0], row_no))
            ys.append(_parse_field(row[1], row_no))
    if not xs:
        raise SampleError(f"{path}: no data rows")
    if extra_cols:
        warnings.warn(f"{path}: columns beyond the first two are ignored", stacklevel=2)
    return Sample2D(np.array(xs), np.array(ys), label=label or path.name)


def save_csv(s: Sample2D, path, header: bool = False) -> None:
    """Write `s` as CSV using shortest round-trip float formatting."""
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        if header:
            w.writerow(["x", "y"])
        for a, b in zip(s.x.tolist(), s.y.tolist()):
            w.writerow([repr(a), repr(b)])
