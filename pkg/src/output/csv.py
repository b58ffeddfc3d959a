#!/usr/bin/env python3
"""CSV formatter for sweeps and single results"""
import csv
import io
from typing import Optional

from src.core.constants import Output
from src.core.models import SweepRow
from src.output.base import BaseFormatter, format_probability


def _axis_text(value: Optional[float]) -> str:
    if value is None:
        return ""
    return str(int(value)) if float(value).is_integer() else format_probability(value)


class CSVFormatter(BaseFormatter):
    """Format sweep rows with the fixed header; absent cells stay empty

    Config:
        raw_bound: populate the bound_raw column (default False)
    """

    def format(self, results: list[SweepRow]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(Output.CSV_HEADER)
        for row in results:
            writer.writerow(self.cells(row))
        return buffer.getvalue()

    def cells(self, row: SweepRow) -> list[str]:
        raw_bound = bool(self.config.get("raw_bound", False))
        bound, sim = row.bound, row.simulation

        raw: Optional[float] = bound.p_total if bound is not None and raw_bound else None
        components = row.bound_components or (None, None, None, None)
        return [
            _axis_text(row.axis_value),
            format_probability(raw),
            format_probability(row.bound_total),
            *(format_probability(c) for c in components),
            format_probability(sim.estimate if sim else None),
            format_probability(sim.ci_low if sim else None),
            format_probability(sim.ci_high if sim else None),
            str(sim.trials) if sim else "",
            str(sim.seed) if sim else "",
        ]
