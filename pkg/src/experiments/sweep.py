#!/usr/bin/env python3
"""Parameter sweeps over a base network configuration"""
import asyncio
import time
from concurrent.futures import Executor, ProcessPoolExecutor
from typing import Any, Optional

from src.core.base import EvaluationRequest
from src.core.config import Settings
from src.core.container import Container
from src.core.errors import MarcError
from src.core.logger import get_logger
from src.core.models import NetworkConfig, SweepRow, SweepSpec

logger = get_logger("sweep")


def evaluate_point(
    axis_value: float,
    cfg: NetworkConfig,
    evaluator_names: list[str],
    request: EvaluationRequest,
) -> SweepRow:
    """Run the requested evaluators at one sweep point"""
    container = Container()
    fields: dict[str, Any] = {}
    for name in evaluator_names:
        evaluator = container.get_evaluator(name)
        if evaluator is None:
            raise MarcError(f"evaluator {name!r} is not available")
        fields.update(evaluator.evaluate(cfg, request))
    return SweepRow(axis_value=axis_value, **fields)


async def run_sweep_async(spec: SweepSpec, executor: Optional[Executor] = None) -> list[SweepRow]:
    """Evaluate all sweep points concurrently; rows come back in axis order"""
    loop = asyncio.get_running_loop()
    names = spec.outputs.evaluator_names()
    # Points already run in parallel, so each simulation stays single-process
    request = EvaluationRequest(
        trials=spec.trials,
        seed=spec.seed,
        shared_generation=spec.shared_generation,
        workers=1,
    )

    tasks = [
        loop.run_in_executor(executor, evaluate_point, value, spec.config_for(value), names, request)
        for value in spec.values
    ]
    return list(await asyncio.gather(*tasks))


def run_sweep(spec: SweepSpec, settings: Optional[Settings] = None) -> list[SweepRow]:
    """Evaluate a sweep, in parallel when settings.workers > 1"""
    settings = settings or Settings()
    start = time.time()
    logger.info(f"Sweep over {spec.axis.value}: {len(spec.values)} points, outputs={spec.outputs.value}")

    if settings.workers > 1 and len(spec.values) > 1:
        with ProcessPoolExecutor(max_workers=settings.workers) as pool:
            rows = asyncio.run(run_sweep_async(spec, pool))
    else:
        request = EvaluationRequest(
            trials=spec.trials,
            seed=spec.seed,
            shared_generation=spec.shared_generation,
            workers=settings.workers,
        )
        names = spec.outputs.evaluator_names()
        rows = [evaluate_point(value, spec.config_for(value), names, request) for value in spec.values]

    logger.info(f"Sweep finished in {time.time() - start:.2f}s")
    return rows
