"""CSV writer for per-t scan output."""

from __future__ import annotations

import csv
import os
from pathlib import Path
from typing import Iterable, Optional, Sequence

from utils.logging_config import get_logger

logger = get_logger(__name__)

SCAN_CSV_HEADER = ("t", "value", "squarefree", "witness")


class FileOperations:
    """Output files rooted at a base directory."""

    def __init__(self, base_path: Optional[str] = None):
        """Initialize file operations.

        Args:
            base_path: Base directory for relative paths (defaults to cwd)
        """
        self.base_path = Path(base_path or os.getcwd()).resolve()

    def write_csv(self, file_path: str, header: Sequence[str], rows: Iterable[Sequence[object]]) -> int:
        """Write rows under a header line.

        Args:
            file_path: Destination (relative to base_path or absolute)
            header: Column names
            rows: Row values, converted with str()

        Returns:
            Number of data rows written
        """
        full_path = self._prepare(file_path)
        count = 0
        with open(full_path, "w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(header)
            for row in rows:
                writer.writerow(row)
                count += 1
        logger.info(f"Wrote {count} rows to {full_path}")
        return count

    def _prepare(self, file_path: str) -> Path:
        full_path = self._resolve_path(file_path)
        full_path.parent.mkdir(parents=True, exist_ok=True)
        return full_path

    def _resolve_path(self, file_path: str) -> Path:
        """Resolve to an absolute path.

        Raises:
            ValueError: If a relative path escapes base_path
        """
        path = Path(file_path)
        if path.is_absolute():
            return path
        resolved = (self.base_path / path).resolve()
        try:
            resolved.relative_to(self.base_path)
        except ValueError:
            raise ValueError(f"Path {file_path} is outside base path {self.base_path}")
        return resolved
