#!/usr/bin/env python3
"""Plain `key = value` formatter for single results"""
from typing import Union

from src.core.models import BoundBreakdown, SimulationResult
from src.output.base import BaseFormatter, format_probability


class TextFormatter(BaseFormatter):
    """Format a bound or a simulation result as aligned key = value lines"""

    def format(self, results: Union[BoundBreakdown, SimulationResult]) -> str:
        if isinstance(results, BoundBreakdown):
            pairs = self._bound_pairs(results)
        elif isinstance(results, SimulationResult):
            pairs = self._simulation_pairs(results)
        else:
            raise TypeError(f"cannot format {type(results).__name__} as text")

        width = max(len(key) for key, _ in pairs)
        return "".join(f"{key:<{width}} = {value}\n" for key, value in pairs)

    def _bound_pairs(self, bound: BoundBreakdown) -> list[tuple[str, str]]:
        return [
            ("scheme", bound.scheme.value),
            ("bound_unaided", format_probability(bound.p_unaided)),
            ("bound_partial1", format_probability(bound.p_partial_1)),
            ("bound_partial2", format_probability(bound.p_partial_2)),
            ("bound_fully", format_probability(bound.p_fully_aided)),
            ("bound_raw", format_probability(bound.p_total)),
            ("bound_clamped", format_probability(bound.p_total_clamped)),
        ]

    def _simulation_pairs(self, result: SimulationResult) -> list[tuple[str, str]]:
        pairs = [
            ("sim_estimate", format_probability(result.estimate)),
            ("sim_ci_low", format_probability(result.ci_low)),
            ("sim_ci_high", format_probability(result.ci_high)),
            ("trials", str(result.trials)),
            ("successes", str(result.successes)),
            ("seed", str(result.seed)),
            ("relay_generation", "shared" if result.shared_generation else "independent"),
        ]
        for mode, count in sorted(result.mode_counts.items(), key=lambda item: item[0].value):
            pairs.append((f"mode_{mode.value}", format_probability(count / result.trials)))
        pairs.append(("mean_overheard_1", format_probability(result.mean_overheard(1))))
        pairs.append(("mean_overheard_2", format_probability(result.mean_overheard(2))))
        return pairs
