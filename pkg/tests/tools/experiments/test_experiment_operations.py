"""Tests for the experiment tools."""

from pathlib import Path

import pytest

from rdft_kit.tools import DetectionOperation, Table1Operation


@pytest.mark.asyncio
async def test_table1(temp_dir):
    """Test a short rounding-error run."""
    op = Table1Operation(root_dir=temp_dir)
    result = await op(
        methods=[1, 3],
        k_max=8,
        b_max=4,
        probe_bin=2,
        segments=1,
        segment_length=100,
        checkpoint_interval=50,
        precision="single",
    )
    assert result["status"] == "success"
    assert result["files"] == ["table1_1_single.csv", "table1_3_single.csv", "table1_summary_single.csv"]
    assert set(result["results"]) == {"1", "3"}
    for values in result["results"].values():
        assert values["rmse_last_segment"] >= 0.0
        assert values["seconds"] >= 0.0
    assert all((Path(temp_dir) / name).is_file() for name in result["files"])


@pytest.mark.asyncio
async def test_detection(temp_dir):
    """Test a small detection run."""
    op = DetectionOperation(root_dir=temp_dir)
    result = await op(methods=[1], k_max=16, settle=100)
    assert result["files"] == ["detection_1_double.csv"]
    assert "bins 0..8" in result["message"]
    assert result["weak_tone_detected"] == {"1": False}
