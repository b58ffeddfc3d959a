#!/usr/bin/env python3
"""Monte Carlo evaluator"""
from typing import Any

from src.core.base import BaseEvaluator, EvaluationRequest
from src.core.models import NetworkConfig
from src.simulation.monte_carlo import simulate


class SimulationEvaluator(BaseEvaluator):
    """Simulated decoding frequency of the two-phase protocol"""

    name = "sim"
    description = "Monte Carlo estimate with a 95% Wilson interval"

    def evaluate(self, cfg: NetworkConfig, request: EvaluationRequest) -> dict[str, Any]:
        result = simulate(
            cfg,
            trials=request.trials,
            seed=request.seed,
            workers=request.workers,
            shared_generation=request.shared_generation,
        )
        return {"simulation": result}
