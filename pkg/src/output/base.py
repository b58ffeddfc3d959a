#!/usr/bin/env python3
"""Base formatter class"""
from abc import ABC, abstractmethod
from typing import Any, Optional

from src.core.constants import Output


def format_probability(value: Optional[float]) -> str:
    """Probability with a fixed number of significant digits; empty when absent"""
    if value is None:
        return ""
    return f"{value:.{Output.SIGNIFICANT_DIGITS}g}"


class BaseFormatter(ABC):
    """Base class for all output formatters"""

    def __init__(self, config: Optional[dict[str, Any]] = None):
        """Initialize formatter with optional config"""
        self.config = config or {}

    @abstractmethod
    def format(self, results: Any) -> str:
        """Format evaluation results

        Args:
            results: A BoundBreakdown, SimulationResult or list of SweepRow

        Returns:
            Formatted string representation, newline terminated
        """
        pass
