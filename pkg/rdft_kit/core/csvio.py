"""CSV reading and writing for design artifacts and experiment outputs."""

from pathlib import Path
from typing import Any, Iterable, List, Optional, Sequence, Tuple

import pandas as pd
from fastmcp.utilities.logging import get_logger

from .errors import InvalidInputError

logger = get_logger(__name__)


def write_csv(
    path: str | Path,
    header: Sequence[str],
    rows: Iterable[Sequence[Any]],
    comment: Optional[str] = None,
) -> Path:
    """Write rows to a CSV file, creating parent directories.

    Args:
        path: Destination file
        header: Column names
        rows: Row values in column order
        comment: Optional metadata written first as a ``#``-prefixed line

    Returns:
        The path written

    """
    file_path = Path(path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    frame = pd.DataFrame(list(rows), columns=list(header))
    with open(file_path, "w", newline="", encoding="utf-8") as f:
        if comment is not None:
            f.write(f"# {comment}\n")
        frame.to_csv(f, index=False, na_rep="nan", lineterminator="\n")
    logger.info(f"Wrote {len(frame)} rows to {file_path}")
    return file_path


def read_csv(path: str | Path) -> Tuple[Optional[str], List[str], List[List[str]]]:
    """Read a CSV file written by :func:`write_csv`.

    Cells are returned as the text written, so floats keep every digit.

    Args:
        path: Source file

    Returns:
        ``(comment, header, rows)``; comment is None when the file has no metadata line

    Raises:
        InvalidInputError: If the file is missing or has no header

    """
    file_path = Path(path)
    if not file_path.is_file():
        raise InvalidInputError(f"CSV file does not exist: {path}")
    with open(file_path, encoding="utf-8") as f:
        first = f.readline()
    comment = first[1:].strip() if first.startswith("#") else None
    try:
        frame = pd.read_csv(file_path, skiprows=1 if comment is not None else 0, dtype=str, keep_default_na=False)
    except pd.errors.EmptyDataError as e:
        raise InvalidInputError(f"CSV file has no header: {path}") from e
    return comment, [str(c) for c in frame.columns], frame.values.tolist()
