"""Shared fixtures."""

from pathlib import Path

import numpy as np
import pytest


@pytest.fixture(scope="function")
def temp_dir(tmp_path) -> str:
    """Create a temporary output directory for testing."""
    return Path(tmp_path).as_posix()


@pytest.fixture
def rng() -> np.random.Generator:
    """Deterministic generator for random test streams."""
    return np.random.default_rng(20240611)
