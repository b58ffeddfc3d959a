#!/usr/bin/env python3
"""Analytic upper bound evaluator"""
from typing import Any

from src.analysis.bounds import decode_prob_bound
from src.core.base import BaseEvaluator, EvaluationRequest
from src.core.logger import get_logger
from src.core.models import NetworkConfig


class BoundEvaluator(BaseEvaluator):
    """Closed-form decoding-probability upper bound"""

    name = "bound"
    description = "Upper bound on the destination decoding probability"

    logger = get_logger("bound")

    def evaluate(self, cfg: NetworkConfig, request: EvaluationRequest) -> dict[str, Any]:
        breakdown = decode_prob_bound(cfg)
        self.logger.debug(f"Bound {breakdown.p_total!r} for {cfg}")
        return {"bound": breakdown}
