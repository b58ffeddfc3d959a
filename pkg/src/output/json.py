#!/usr/bin/env python3
"""JSON formatter for marc-rlnc results"""
import json
from typing import Any

from pydantic import BaseModel

from src.__version__ import __version__
from src.output.base import BaseFormatter


class JSONFormatter(BaseFormatter):
    """Format results as deterministic JSON"""

    def format(self, results: Any) -> str:
        """Format results as JSON

        Args:
            results: A model or a list of models

        Returns:
            JSON string with sorted keys and indentation
        """
        # No timestamp: identical inputs give identical bytes
        output = {
            "version": __version__,
            "results": self._dump(results),
        }
        return json.dumps(output, indent=2, sort_keys=True, default=self._json_encoder, ensure_ascii=False) + "\n"

    def _dump(self, obj: Any) -> Any:
        if isinstance(obj, BaseModel):
            return obj.model_dump(mode="json")
        if isinstance(obj, (list, tuple)):
            return [self._dump(item) for item in obj]
        return obj

    def _json_encoder(self, obj):
        """Custom JSON encoder for special types"""
        if hasattr(obj, "value"):
            return obj.value
        return str(obj)
