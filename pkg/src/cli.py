#!/usr/bin/env python3
"""Command-line interface for marc-rlnc"""
from collections.abc import Iterator
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Any, Optional

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape

from src.__version__ import __version__
from src.analysis.bounds import decode_prob_bound
from src.core.base import EvaluationRequest
from src.core.config import Settings, load_config_file
from src.core.constants import ExitCode
from src.core.errors import InvalidArgumentError, MarcError, OutputError
from src.core.logger import set_level
from src.core.models import NetworkConfig, Scheme, SweepAxis, SweepOutputs, SweepRow, SweepSpec
from src.core.validators import InputValidator
from src.experiments.sweep import run_sweep
from src.output.base import BaseFormatter
from src.output.csv import CSVFormatter
from src.output.json import JSONFormatter
from src.output.text import TextFormatter
from src.simulation.monte_carlo import simulate as run_simulation

app = typer.Typer(
    name="marc",
    help="Decoding-probability bounds and simulation for a two-source relay network with RLNC",
    add_completion=False,
)

# stdout carries results only
console = Console()
err_console = Console(stderr=True)

NETWORK_KEYS = ("k1", "k2", "n1", "n2", "nr", "p1d", "p2d", "p1r", "p2r", "prd", "scheme")

# Symmetric shorthand -> per-source fields; per-source values from the same layer win
SHORTHANDS = {
    "k": ("k1", "k2"),
    "n": ("n1", "n2"),
    "psd": ("p1d", "p2d"),
    "psr": ("p1r", "p2r"),
}


class OutputFormat(str, Enum):
    """Stdout format for single results"""
    TEXT = "text"
    JSON = "json"


# Shared options
K1 = typer.Option(None, "--k1", help="Source packets of S1")
K2 = typer.Option(None, "--k2", help="Source packets of S2")
N1 = typer.Option(None, "--n1", help="Coded packets sent by S1")
N2 = typer.Option(None, "--n2", help="Coded packets sent by S2")
NR = typer.Option(None, "--nr", help="Coded packets sent by the relay")
P1D = typer.Option(None, "--p1d", help="Erasure probability S1 -> D")
P2D = typer.Option(None, "--p2d", help="Erasure probability S2 -> D")
P1R = typer.Option(None, "--p1r", help="Erasure probability S1 -> R")
P2R = typer.Option(None, "--p2r", help="Erasure probability S2 -> R")
PRD = typer.Option(None, "--prd", help="Erasure probability R -> D")
K = typer.Option(None, "--k", help="Sets k1 and k2")
N = typer.Option(None, "--n", help="Sets n1 and n2")
PSD = typer.Option(None, "--psd", help="Sets p1d and p2d")
PSR = typer.Option(None, "--psr", help="Sets p1r and p2r")
SCHEME = typer.Option(None, "--scheme", help="Source coding scheme")
TRIALS = typer.Option(None, "--trials", help="Monte Carlo trials (default from --profile)")
SEED = typer.Option(None, "--seed", help="64-bit master seed")
CONFIG = typer.Option(None, "--config", "-c", help="Experiment file with key = value lines")
OUT = typer.Option(None, "--out", "-o", help="Write CSV to this file")
PROFILE = typer.Option(None, "--profile", "-p", help="Trial budget profile: quick/standard/thorough")
WORKERS = typer.Option(None, "--workers", "-w", help="Worker processes")


def _settings(profile: Optional[str], workers: Optional[int]) -> Settings:
    overrides: dict[str, Any] = {}
    if profile is not None:
        overrides["profile"] = profile
    if workers is not None:
        overrides["workers"] = workers
    settings = Settings(**overrides)
    if settings.profile not in settings.PROFILES:
        raise InvalidArgumentError(f"profile: unknown profile {settings.profile!r}")
    set_level(settings.log_level)
    return settings


def expand_shorthands(layer: dict[str, Any]) -> dict[str, Any]:
    """Replace symmetric shorthands by per-source keys within one layer of values"""
    expanded = {key: value for key, value in layer.items() if key not in SHORTHANDS}
    for short, targets in SHORTHANDS.items():
        if short in layer:
            for target in targets:
                expanded.setdefault(target, layer[short])
    return expanded


def merge_values(config: Optional[Path], flags: dict[str, Any]) -> dict[str, Any]:
    """Config file values overridden by every flag that was given"""
    values = expand_shorthands(dict(load_config_file(config))) if config else {}
    values.update(expand_shorthands({key: value for key, value in flags.items() if value is not None}))
    return values


def network_fields(values: dict[str, Any]) -> dict[str, Any]:
    """NetworkConfig fields from merged flag and file values"""
    expanded = expand_shorthands(values)
    fields = {key: expanded[key] for key in NETWORK_KEYS if key in expanded}
    if "nr" in fields:
        fields["n_r"] = fields.pop("nr")
    return fields


def _write_csv(out: Path, text: str, rows: int) -> None:
    if not InputValidator.validate_output_path(out):
        raise OutputError(f"cannot write to {out}")
    with open(out, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    err_console.print(f"[green]✓ Wrote {rows} row(s) to {escape(str(out))}[/green]")


def _emit(result: Any, fmt: OutputFormat) -> None:
    formatter: BaseFormatter = JSONFormatter() if fmt == OutputFormat.JSON else TextFormatter()
    typer.echo(formatter.format(result), nl=False)


@contextmanager
def _exit_codes() -> Iterator[None]:
    """Map failures to exit codes with a diagnostic on stderr"""
    try:
        yield
    except ValidationError as e:
        for error in e.errors():
            field = ".".join(str(part) for part in error["loc"]) or "config"
            err_console.print(f"[red]✗ Invalid {escape(field)}: {escape(error['msg'])}[/red]")
        raise typer.Exit(code=ExitCode.INVALID_ARGUMENTS)
    except InvalidArgumentError as e:
        err_console.print(f"[red]✗ {escape(str(e))}[/red]")
        raise typer.Exit(code=ExitCode.INVALID_ARGUMENTS)
    except OSError as e:
        err_console.print(f"[red]✗ I/O error: {escape(str(e))}[/red]")
        raise typer.Exit(code=ExitCode.IO_FAILURE)
    except MarcError as e:
        err_console.print(f"[red]✗ {escape(str(e))}[/red]")
        raise typer.Exit(code=ExitCode.INTERNAL_ERROR)


def _collect(**flags: Any) -> dict[str, Any]:
    return {key: (value.value if isinstance(value, Enum) else value) for key, value in flags.items()}


@app.command()
def bound(
    k1: Optional[int] = K1, k2: Optional[int] = K2,
    n1: Optional[int] = N1, n2: Optional[int] = N2, nr: Optional[int] = NR,
    p1d: Optional[float] = P1D, p2d: Optional[float] = P2D,
    p1r: Optional[float] = P1R, p2r: Optional[float] = P2R, prd: Optional[float] = PRD,
    k: Optional[int] = K, n: Optional[int] = N,
    psd: Optional[float] = PSD, psr: Optional[float] = PSR,
    scheme: Optional[Scheme] = SCHEME,
    config: Optional[Path] = CONFIG,
    out: Optional[Path] = OUT,
    format: OutputFormat = typer.Option(OutputFormat.TEXT, "--format", "-f", help="Output format: text/json"),
):
    """Evaluate the decoding-probability upper bound"""
    with _exit_codes():
        _settings(None, None)
        values = merge_values(config, _collect(
            k1=k1, k2=k2, n1=n1, n2=n2, nr=nr, p1d=p1d, p2d=p2d, p1r=p1r, p2r=p2r, prd=prd,
            k=k, n=n, psd=psd, psr=psr, scheme=scheme,
        ))
        cfg = NetworkConfig.model_validate(network_fields(values))

        breakdown = decode_prob_bound(cfg)
        _emit(breakdown, format)

        if out:
            row = SweepRow(bound=breakdown)
            _write_csv(out, CSVFormatter({"raw_bound": True}).format([row]), 1)


@app.command()
def simulate(
    k1: Optional[int] = K1, k2: Optional[int] = K2,
    n1: Optional[int] = N1, n2: Optional[int] = N2, nr: Optional[int] = NR,
    p1d: Optional[float] = P1D, p2d: Optional[float] = P2D,
    p1r: Optional[float] = P1R, p2r: Optional[float] = P2R, prd: Optional[float] = PRD,
    k: Optional[int] = K, n: Optional[int] = N,
    psd: Optional[float] = PSD, psr: Optional[float] = PSR,
    scheme: Optional[Scheme] = SCHEME,
    trials: Optional[int] = TRIALS,
    seed: Optional[int] = SEED,
    config: Optional[Path] = CONFIG,
    out: Optional[Path] = OUT,
    profile: Optional[str] = PROFILE,
    workers: Optional[int] = WORKERS,
    shared: bool = typer.Option(True, "--shared/--independent", help="Relay overhears the packets D receives, or an independent generation"),
    format: OutputFormat = typer.Option(OutputFormat.TEXT, "--format", "-f", help="Output format: text/json"),
):
    """Estimate the decoding probability by Monte Carlo"""
    with _exit_codes():
        settings = _settings(profile, workers)
        values = merge_values(config, _collect(
            k1=k1, k2=k2, n1=n1, n2=n2, nr=nr, p1d=p1d, p2d=p2d, p1r=p1r, p2r=p2r, prd=prd,
            k=k, n=n, psd=psd, psr=psr, scheme=scheme, trials=trials, seed=seed,
        ))
        cfg = NetworkConfig.model_validate(network_fields(values))
        request = EvaluationRequest.model_validate({
            "trials": values.get("trials", settings.default_trials),
            "seed": values.get("seed", settings.default_seed),
            "shared_generation": shared,
            "workers": settings.workers,
        })

        result = run_simulation(
            cfg,
            trials=request.trials,
            seed=request.seed,
            workers=request.workers,
            shared_generation=request.shared_generation,
            settings=settings,
        )
        _emit(result, format)

        if out:
            _write_csv(out, CSVFormatter().format([SweepRow(simulation=result)]), 1)


@app.command()
def sweep(
    axis: SweepAxis = typer.Option(..., "--axis", help="Swept parameter: nr/psd/excess"),
    values: str = typer.Option(..., "--values", help="Comma-separated axis values"),
    outputs: SweepOutputs = typer.Option(SweepOutputs.BOTH, "--outputs", help="Columns to compute: bound/sim/both"),
    raw_bound: bool = typer.Option(False, "--raw-bound", help="Fill the bound_raw column"),
    k1: Optional[int] = K1, k2: Optional[int] = K2,
    n1: Optional[int] = N1, n2: Optional[int] = N2, nr: Optional[int] = NR,
    p1d: Optional[float] = P1D, p2d: Optional[float] = P2D,
    p1r: Optional[float] = P1R, p2r: Optional[float] = P2R, prd: Optional[float] = PRD,
    k: Optional[int] = K, n: Optional[int] = N,
    psd: Optional[float] = PSD, psr: Optional[float] = PSR,
    scheme: Optional[Scheme] = SCHEME,
    trials: Optional[int] = TRIALS,
    seed: Optional[int] = SEED,
    config: Optional[Path] = CONFIG,
    out: Optional[Path] = OUT,
    profile: Optional[str] = PROFILE,
    workers: Optional[int] = WORKERS,
):
    """Evaluate bound and/or simulation along one parameter axis and emit CSV"""
    with _exit_codes():
        settings = _settings(profile, workers)
        merged = merge_values(config, _collect(
            k1=k1, k2=k2, n1=n1, n2=n2, nr=nr, p1d=p1d, p2d=p2d, p1r=p1r, p2r=p2r, prd=prd,
            k=k, n=n, psd=psd, psr=psr, scheme=scheme, trials=trials, seed=seed,
        ))
        fields = network_fields(merged)
        # The swept field may be omitted from the base; any valid placeholder will do
        if axis == SweepAxis.EXCESS:
            for k_key, n_key in (("k1", "n1"), ("k2", "n2")):
                if k_key in fields:
                    fields.setdefault(n_key, fields[k_key])

        spec = SweepSpec.model_validate({
            "base": fields,
            "axis": axis,
            "values": InputValidator.parse_values(values),
            "trials": merged.get("trials", settings.default_trials),
            "seed": merged.get("seed", settings.default_seed),
            "outputs": outputs,
            "raw_bound": raw_bound,
        })
        if out and not InputValidator.validate_output_path(out):
            raise OutputError(f"cannot write to {out}")

        rows = run_sweep(spec, settings)
        text = CSVFormatter({"raw_bound": spec.raw_bound}).format(rows)
        if out:
            _write_csv(out, text, len(rows))
        else:
            typer.echo(text, nl=False)


@app.command()
def version():
    """Show version"""
    console.print(f"[cyan]marc-rlnc {__version__}[/cyan]")


if __name__ == "__main__":
    app()
