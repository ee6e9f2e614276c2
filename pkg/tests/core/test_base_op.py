"""Tests for the operation base class."""

from dataclasses import dataclass
from pathlib import Path

import pytest

from rdft_kit.core import AsyncOperation, InvalidInputError


@dataclass
class EchoOperation(AsyncOperation):
    """Operation used to exercise the base class."""

    name = "echo"

    async def __call__(self, filename: str = "out.csv") -> dict:
        """Resolve an output file."""
        return {"status": "success", "path": self._output_path(filename).as_posix()}


def test_root_validation(temp_dir):
    """Test that the root must be an existing directory."""
    with pytest.raises(InvalidInputError, match="does not exist"):
        EchoOperation(root_dir="/non/existent/path")
    file_path = Path(temp_dir) / "file.txt"
    file_path.write_text("x")
    with pytest.raises(InvalidInputError, match="not a directory"):
        EchoOperation(root_dir=file_path.as_posix())


@pytest.mark.asyncio
async def test_output_path_inside_root(temp_dir):
    """Test that outputs resolve inside the root and escapes are refused."""
    op = EchoOperation(root_dir=temp_dir)
    result = await op("nested/out.csv")
    assert result["path"] == (Path(temp_dir).resolve() / "nested" / "out.csv").as_posix()
    with pytest.raises(InvalidInputError, match="not within the root directory"):
        await op("../escape.csv")
    with pytest.raises(InvalidInputError, match="not within the root directory"):
        await op("/tmp/elsewhere.csv")


def test_docstring_and_name(temp_dir):
    """Test the docstring and name properties."""
    op = EchoOperation(root_dir=temp_dir)
    assert op.docstring == "Resolve an output file."
    assert op.name == "echo"
