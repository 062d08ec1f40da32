import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kstest2d.samples import Sample2D, SampleError, load_csv, save_csv, validate


def write(tmp_path, text, name="s.csv"):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return p


def test_load_plain(tmp_path):
    s = load_csv(write(tmp_path, "0,0\n1,1"), has_header=False)
    assert [tuple(p) for p in s.points] == [(0.0, 0.0), (1.0, 1.0)]


def test_load_header(tmp_path):
    s = load_csv(write(tmp_path, "x,y\n0.5,-2\n"), has_header=True)
    assert [tuple(p) for p in s.points] == [(0.5, -2.0)]


def test_load_scientific_and_blank_lines(tmp_path):
    s = load_csv(write(tmp_path, "1e-3, 2.5E2\n\n-3,4\n"))
    assert s.x.tolist() == [0.001, -3.0]
    assert s.y.tolist() == [250.0, 4.0]


def test_non_numeric_reports_row(tmp_path):
    with pytest.raises(SampleError, match="row 1"):
        load_csv(write(tmp_path, "a,b"), has_header=False)
    with pytest.raises(SampleError, match="row 3"):
        load_csv(write(tmp_path, "x,y\n1,2\n3,oops\n"), has_header=True)


def test_missing_file_and_empty(tmp_path):
    with pytest.raises(SampleError, match="no such file"):
        load_csv(tmp_path / "nope.csv")
    with pytest.raises(SampleError, match="no data"):
        load_csv(write(tmp_path, "x,y\n"), has_header=True)


def test_single_column_row(tmp_path):
    with pytest.raises(SampleError, match="row 2"):
        load_csv(write(tmp_path, "1,2\n3\n"))


def test_non_finite_field_rejected(tmp_path):
    with pytest.raises(SampleError, match="row 1"):
        load_csv(write(tmp_path, "nan,1\n"))


def test_extra_columns_warn(tmp_path):
    with pytest.warns(UserWarning, match="ignored"):
        s = load_csv(write(tmp_path, "1,2,3\n4,5,6\n"))
    assert s.as_array().tolist() == [[1, 2], [4, 5]]


def test_validate():
    validate(Sample2D.from_points([(0, 0)]))
    with pytest.raises(SampleError, match="empty sample"):
        validate(Sample2D.from_points([]))
    with pytest.raises(SampleError, match="index 0"):
        validate(Sample2D.from_points([(math.nan, 0)]))
    with pytest.raises(SampleError, match="index 1"):
        validate(Sample2D.from_points([(0, 0), (1, math.inf)]))


def test_sample_is_immutable():
    s = Sample2D.from_points([(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        s.x[0] = 5.0
    with pytest.raises(AttributeError):
        s.label = "other"


def test_duplicates_allowed():
    s = Sample2D.from_points([(1, 1), (1, 1)])
    validate(s)
    assert len(s) == 2


finite = st.floats(allow_nan=False, allow_infinity=False)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(finite, finite), min_size=1, max_size=30))
def test_csv_round_trip(tmp_path_factory, pts):
    path = tmp_path_factory.mktemp("rt") / "s.csv"
    s = Sample2D.from_points(pts)
    save_csv(s, path, header=True)
    back = load_csv(path, has_header=True)
    validate(back)
    assert np.array_equal(back.x, s.x) and np.array_equal(back.y, s.y)
