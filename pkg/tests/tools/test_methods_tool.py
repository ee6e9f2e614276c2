"""Tests for the method catalogue tool."""

import pytest

from rdft_kit.tools import ListMethodsOperation


@pytest.mark.asyncio
async def test_list_methods(temp_dir):
    """Test that every method is listed with its summary."""
    result = await ListMethodsOperation(root_dir=temp_dir)()
    methods = result["methods"]
    assert list(methods) == ["bandpass"] + [str(n) for n in range(1, 13)]
    assert methods["12"]["family"] == "SDFT"
    assert methods["8"]["outer_feedback"] is True
    assert methods["1"]["window"] == "Rectangular Time"
