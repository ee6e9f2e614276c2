"""Tests for CSV reading and writing."""

from pathlib import Path

import numpy as np
import pandas as pd
import pytest

from rdft_kit.core import InvalidInputError
from rdft_kit.core.csvio import read_csv, write_csv


def test_write_then_read(temp_dir):
    """Test that comment, header and rows survive, floats in full precision."""
    path = write_csv(Path(temp_dir) / "sub" / "out.csv", ("n", "value"), [(1, 0.1), (2, 1 / 3)], "K=4, B=2")
    comment, header, rows = read_csv(path)
    assert comment == "K=4, B=2"
    assert header == ["n", "value"]
    assert rows == [["1", "0.1"], ["2", repr(1 / 3)]]


def test_read_without_comment(temp_dir):
    """Test a file without a metadata line."""
    path = write_csv(Path(temp_dir) / "out.csv", ("a",), [])
    assert read_csv(path) == (None, ["a"], [])


def test_read_errors(temp_dir):
    """Test missing and empty files."""
    with pytest.raises(InvalidInputError, match="does not exist"):
        read_csv(Path(temp_dir) / "missing.csv")
    empty = Path(temp_dir) / "empty.csv"
    empty.write_text("")
    with pytest.raises(InvalidInputError, match="no header"):
        read_csv(empty)


def test_frame_round_trip(temp_dir):
    """Test that exports load as numeric frames and missing values survive as nan."""
    path = write_csv(Path(temp_dir) / "out.csv", ("n", "value"), [(1, 0.25), (2, float("nan"))], "seed=3")
    frame = pd.read_csv(path, comment="#")
    assert list(frame.columns) == ["n", "value"]
    assert frame["n"].tolist() == [1, 2]
    assert frame["value"].iloc[0] == 0.25
    assert np.isnan(frame["value"].iloc[1])
    assert read_csv(path)[2][1] == ["2", "nan"]
