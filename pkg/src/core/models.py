#!/usr/bin/env python3
"""Data models for marc-rlnc"""
from enum import Enum
from typing import Annotated, Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from src.core.constants import Limits

Probability = Annotated[float, Field(ge=0.0, le=1.0)]
Seed = Annotated[int, Field(ge=0, le=Limits.MAX_SEED)]
Source = Literal[1, 2]


class Scheme(str, Enum):
    """Coding scheme used by the source nodes"""
    NON_SYSTEMATIC = "nonsys"
    SYSTEMATIC = "sys"


class NetworkConfig(BaseModel):
    """Two sources, one relay, one destination; every link a packet erasure channel"""

    model_config = ConfigDict(frozen=True)

    k1: int = Field(ge=1, description="source packets of S1")
    k2: int = Field(ge=1, description="source packets of S2")
    n1: int = Field(ge=1, description="coded packets sent by S1")
    n2: int = Field(ge=1, description="coded packets sent by S2")
    n_r: int = Field(default=0, ge=0, description="coded packets sent by the relay")
    p1d: Probability = 0.0
    p2d: Probability = 0.0
    p1r: Probability = 0.0
    p2r: Probability = 0.0
    prd: Probability = 0.0
    scheme: Scheme = Scheme.NON_SYSTEMATIC

    @model_validator(mode="after")
    def _check_packet_counts(self) -> "NetworkConfig":
        if self.n1 < self.k1:
            raise ValueError(f"n1 must be >= k1 (got n1={self.n1}, k1={self.k1})")
        if self.n2 < self.k2:
            raise ValueError(f"n2 must be >= k2 (got n2={self.n2}, k2={self.k2})")
        return self

    @classmethod
    def symmetric(
        cls,
        k: int,
        n: int,
        n_r: int,
        p_sd: float,
        p_sr: float,
        p_rd: float,
        scheme: Scheme = Scheme.NON_SYSTEMATIC,
    ) -> "NetworkConfig":
        """Build the K1=K2, N1=N2, p1D=p2D, p1R=p2R configuration"""
        return cls(
            k1=k, k2=k, n1=n, n2=n, n_r=n_r,
            p1d=p_sd, p2d=p_sd, p1r=p_sr, p2r=p_sr, prd=p_rd,
            scheme=scheme,
        )

    @property
    def is_symmetric(self) -> bool:
        return (
            self.k1 == self.k2
            and self.n1 == self.n2
            and self.p1d == self.p2d
            and self.p1r == self.p2r
        )

    @property
    def total_source_packets(self) -> int:
        return self.k1 + self.k2

    def k_of(self, source: Source) -> int:
        return self.k1 if source == 1 else self.k2

    def n_of(self, source: Source) -> int:
        return self.n1 if source == 1 else self.n2

    def p_direct(self, source: Source) -> float:
        return self.p1d if source == 1 else self.p2d

    def p_relay(self, source: Source) -> float:
        return self.p1r if source == 1 else self.p2r


class DecodeMode(str, Enum):
    """Which of the three decoding routes delivered both sources"""
    UNAIDED = "unaided"
    PARTIAL_1 = "partial_1"
    PARTIAL_2 = "partial_2"
    FULLY_AIDED = "fully_aided"
    FAILED = "failed"


class BoundBreakdown(BaseModel):
    """Upper bound on the destination decoding probability and its components"""

    model_config = ConfigDict(frozen=True)

    scheme: Scheme
    p_unaided: Probability
    p_partial_1: Probability
    p_partial_2: Probability
    p_fully_aided: Probability
    # Raw sum; may exceed 1 for extreme parameters
    p_total: float = Field(ge=0.0)

    @model_validator(mode="after")
    def _check_composition(self) -> "BoundBreakdown":
        expected = self.p_unaided + self.p_partial_1 + self.p_partial_2 + self.p_fully_aided
        if self.p_total != expected:
            raise ValueError(f"p_total {self.p_total!r} is not the sum of its components {expected!r}")
        return self

    @classmethod
    def compose(
        cls,
        scheme: Scheme,
        p_unaided: float,
        p_partial_1: float,
        p_partial_2: float,
        p_fully_aided: float,
    ) -> "BoundBreakdown":
        """Build a breakdown whose total is the exact sum of the components"""
        return cls(
            scheme=scheme,
            p_unaided=p_unaided,
            p_partial_1=p_partial_1,
            p_partial_2=p_partial_2,
            p_fully_aided=p_fully_aided,
            p_total=p_unaided + p_partial_1 + p_partial_2 + p_fully_aided,
        )

    @property
    def p_partial(self) -> float:
        """Either source aided by the relay"""
        return self.p_partial_1 + self.p_partial_2

    @property
    def p_total_clamped(self) -> float:
        return min(self.p_total, 1.0)

    def components(self) -> dict[DecodeMode, float]:
        return {
            DecodeMode.UNAIDED: self.p_unaided,
            DecodeMode.PARTIAL_1: self.p_partial_1,
            DecodeMode.PARTIAL_2: self.p_partial_2,
            DecodeMode.FULLY_AIDED: self.p_fully_aided,
        }


class TrialOutcome(BaseModel):
    """What happened in one run of the two-phase protocol"""

    model_config = ConfigDict(frozen=True)

    # Packets received at D from each source, and at R (M'_1, M'_2)
    m1: int = Field(ge=0)
    m2: int = Field(ge=0)
    m1_relay: int = Field(ge=0)
    m2_relay: int = Field(ge=0)
    # Relay packets received at D
    m_relay: int = Field(ge=0)
    # Packets of each source received by both R and D
    shared_1: int = Field(ge=0)
    shared_2: int = Field(ge=0)
    relay_decoded_1: bool
    relay_decoded_2: bool
    direct_decoded_1: bool
    direct_decoded_2: bool
    dest_decoded_1: bool
    dest_decoded_2: bool
    dest_decoded_both: bool

    @property
    def received_at_destination(self) -> int:
        return self.m1 + self.m2 + self.m_relay

    @property
    def mode(self) -> DecodeMode:
        if not self.dest_decoded_both:
            return DecodeMode.FAILED
        if self.direct_decoded_1 and self.direct_decoded_2:
            return DecodeMode.UNAIDED
        if self.direct_decoded_2:
            return DecodeMode.PARTIAL_1
        if self.direct_decoded_1:
            return DecodeMode.PARTIAL_2
        return DecodeMode.FULLY_AIDED


class SimulationResult(BaseModel):
    """Aggregated Monte Carlo estimate with a 95% Wilson interval"""

    model_config = ConfigDict(frozen=True)

    trials: int = Field(ge=1)
    successes: int = Field(ge=0)
    estimate: Probability
    ci_low: Probability
    ci_high: Probability
    seed: Seed
    shared_generation: bool = True
    mode_counts: dict[DecodeMode, int] = Field(default_factory=dict)
    overheard_1: int = Field(default=0, ge=0)
    overheard_2: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _check_consistency(self) -> "SimulationResult":
        if self.successes > self.trials:
            raise ValueError("successes cannot exceed trials")
        if self.estimate != self.successes / self.trials:
            raise ValueError("estimate must equal successes / trials")
        if not self.ci_low <= self.estimate <= self.ci_high:
            raise ValueError("confidence interval must contain the estimate")
        return self

    def mode_estimate(self, mode: DecodeMode) -> float:
        return self.mode_counts.get(mode, 0) / self.trials

    def mean_overheard(self, source: Source) -> float:
        total = self.overheard_1 if source == 1 else self.overheard_2
        return total / self.trials


class SweepAxis(str, Enum):
    """Parameter varied along a sweep"""
    NR = "nr"
    PSD = "psd"
    EXCESS = "excess"


class SweepOutputs(str, Enum):
    """Columns requested from a sweep"""
    BOUND = "bound"
    SIMULATION = "sim"
    BOTH = "both"

    @property
    def wants_bound(self) -> bool:
        return self in (SweepOutputs.BOUND, SweepOutputs.BOTH)

    @property
    def wants_simulation(self) -> bool:
        return self in (SweepOutputs.SIMULATION, SweepOutputs.BOTH)

    def evaluator_names(self) -> list[str]:
        names = []
        if self.wants_bound:
            names.append("bound")
        if self.wants_simulation:
            names.append("sim")
        return names


class SweepSpec(BaseModel):
    """Declarative parameter sweep around a base configuration"""

    model_config = ConfigDict(frozen=True)

    base: NetworkConfig
    axis: SweepAxis
    values: list[float] = Field(min_length=1)
    trials: int = Field(default=100_000, ge=1)
    seed: Seed = 12345
    outputs: SweepOutputs = SweepOutputs.BOTH
    raw_bound: bool = False
    shared_generation: bool = True

    @model_validator(mode="after")
    def _check_values(self) -> "SweepSpec":
        if self.axis in (SweepAxis.PSD, SweepAxis.EXCESS) and not self.base.is_symmetric:
            raise ValueError(
                f"axis {self.axis.value} needs a symmetric base (k1=k2, n1=n2, p1d=p2d, p1r=p2r)"
            )
        for value in self.values:
            try:
                self.config_for(value)
            except ValidationError as e:
                raise ValueError(f"value {value} gives an invalid configuration: {e}") from e
        return self

    def config_for(self, value: float) -> NetworkConfig:
        """Configuration at one point of the sweep"""
        update: dict[str, Any]
        if self.axis == SweepAxis.PSD:
            update = {"p1d": value, "p2d": value}
        else:
            if not float(value).is_integer() or value < 0:
                raise ValueError(f"axis {self.axis.value} takes non-negative whole numbers, got {value}")
            if self.axis == SweepAxis.NR:
                update = {"n_r": int(value)}
            else:
                update = {"n1": self.base.k1 + int(value), "n2": self.base.k2 + int(value)}

        return NetworkConfig.model_validate({**self.base.model_dump(), **update})


class SweepRow(BaseModel):
    """One row of sweep output"""

    model_config = ConfigDict(frozen=True)

    # None for a single bound or simulation written as CSV
    axis_value: Optional[float] = None
    bound: Optional[BoundBreakdown] = None
    simulation: Optional[SimulationResult] = None

    @model_validator(mode="after")
    def _check_populated(self) -> "SweepRow":
        if self.bound is None and self.simulation is None:
            raise ValueError("a sweep row needs a bound or a simulation result")
        return self

    @property
    def bound_total(self) -> Optional[float]:
        """Clamped view of the bound"""
        return None if self.bound is None else self.bound.p_total_clamped

    @property
    def bound_components(self) -> Optional[tuple[float, float, float, float]]:
        if self.bound is None:
            return None
        b = self.bound
        return (b.p_unaided, b.p_partial_1, b.p_partial_2, b.p_fully_aided)
