#!/usr/bin/env python3
"""Base class for all evaluators"""
from abc import ABC, abstractmethod
from typing import Any

from pydantic import BaseModel, Field

from src.core.models import NetworkConfig, Seed


class EvaluationRequest(BaseModel):
    """Run parameters shared by every evaluator at a sweep point"""
    trials: int = Field(default=100_000, ge=1)
    seed: Seed = 12345
    shared_generation: bool = True
    workers: int = Field(default=1, ge=1)


class BaseEvaluator(ABC):
    """Base class for evaluator modules"""

    name: str = "base"
    description: str = "Base evaluator"

    @abstractmethod
    def evaluate(self, cfg: NetworkConfig, request: EvaluationRequest) -> dict[str, Any]:
        """Evaluate one network configuration

        Args:
            cfg: Configuration at this point
            request: Trial budget, seed and parallelism

        Returns:
            SweepRow fields produced by this evaluator
        """
        pass
