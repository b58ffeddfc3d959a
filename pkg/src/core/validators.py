#!/usr/bin/env python3
"""Input validation for marc-rlnc command-line arguments"""
import os
import re
from pathlib import Path

from src.core.constants import Limits
from src.core.errors import InvalidArgumentError
from src.core.logger import get_logger

logger = get_logger("validators")


class InputValidator:
    """Validate user inputs"""

    # Characters that never belong in a value list or a path
    DANGEROUS_CHARS = ['|', ';', '&', '$', '`', '\n', '\r', '>', '<']

    NUMBER_PATTERN = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")

    @classmethod
    def validate_output_path(cls, path: Path) -> bool:
        """
        Check that an output file can be created

        Args:
            path: Destination file

        Returns:
            True if the parent directory exists and is writable
        """
        path_str = str(path)
        if len(path_str) > Limits.MAX_PATH_LENGTH:
            logger.warning(f"Path too long: {len(path_str)} chars")
            return False

        if path.exists() and path.is_dir():
            logger.warning(f"Output path is a directory: {path}")
            return False

        parent = path.parent if str(path.parent) else Path(".")
        if not parent.is_dir():
            logger.warning(f"Output directory does not exist: {parent}")
            return False
        if not os.access(parent, os.W_OK):
            logger.warning(f"No write permission for directory: {parent}")
            return False
        return True

    @classmethod
    def parse_values(cls, text: str) -> list[float]:
        """
        Parse a comma-separated list of sweep values

        Args:
            text: e.g. "0,2,4" or "0.2, 0.3"

        Returns:
            Values in the given order

        Raises:
            InvalidArgumentError: On an empty or overlong list, or a malformed item
        """
        text = text.strip()
        if not text:
            raise InvalidArgumentError("values: expected a comma-separated list of numbers")
        if len(text) > Limits.MAX_VALUES_TEXT:
            raise InvalidArgumentError(f"values: list longer than {Limits.MAX_VALUES_TEXT} characters")

        values = []
        for item in text.split(','):
            item = item.strip()
            if any(char in item for char in cls.DANGEROUS_CHARS) or not cls.NUMBER_PATTERN.match(item):
                logger.warning(f"Invalid sweep value: {item!r}")
                raise InvalidArgumentError(f"values: {item!r} is not a number")
            values.append(float(item))
        return values
