#!/usr/bin/env python3
"""One run of the two-phase relay protocol

Only coding vectors are simulated; a node decodes when the coding vectors
it holds have full column rank.
"""
import numpy as np

from src.core.models import NetworkConfig, Scheme, Source, TrialOutcome
from src.gf2.bitmatrix import BitMatrix, random_matrix, rank, stack_block_angular
from src.gf2.shapes import MatrixShape


def source_generation(n: int, k: int, scheme: Scheme, rng: np.random.Generator) -> BitMatrix:
    """Coding vectors of the n packets a source transmits"""
    if scheme == Scheme.SYSTEMATIC:
        coded = random_matrix(MatrixShape(m=n - k, k=k), rng)
        return BitMatrix.identity(k).vstack(coded)
    return random_matrix(MatrixShape(m=n, k=k), rng)


def survivors(count: int, p: float, rng: np.random.Generator) -> np.ndarray:
    """Boolean mask of packets that cross an erasure channel"""
    return rng.random(count) >= p


def _relay_half(decoded: bool, rows: int, cols: int, rng: np.random.Generator) -> BitMatrix:
    if decoded:
        return random_matrix(MatrixShape(m=rows, k=cols), rng)
    return BitMatrix.zeros(rows, cols)


def run_trial(cfg: NetworkConfig, rng: np.random.Generator, shared_generation: bool = True) -> TrialOutcome:
    """Simulate both phases once

    Args:
        cfg: Network parameters
        rng: Stream owned by this trial
        shared_generation: When True, R and D receive erased subsets of the
            same transmitted packets. When False, R receives from an
            independently drawn generation.

    Returns:
        Reception counts and decoding events at R and D
    """
    at_destination: dict[Source, BitMatrix] = {}
    received: dict[Source, tuple[int, int, int]] = {}
    relay_decoded: dict[Source, bool] = {}

    # Phase 1: each source transmits, R overhears
    for source in (1, 2):
        k, n = cfg.k_of(source), cfg.n_of(source)
        sent = source_generation(n, k, cfg.scheme, rng)
        to_dest = survivors(n, cfg.p_direct(source), rng)
        to_relay = survivors(n, cfg.p_relay(source), rng)

        overheard = sent if shared_generation else source_generation(n, k, cfg.scheme, rng)
        at_relay = overheard.take_rows(to_relay)
        at_destination[source] = sent.take_rows(to_dest)

        relay_decoded[source] = rank(at_relay) == k
        # Packets R and D both hold from the same transmission; none when R's generation is its own
        common = int(np.count_nonzero(to_dest & to_relay)) if shared_generation else 0
        received[source] = (int(to_dest.sum()), int(to_relay.sum()), common)

    # Phase 2: relay re-encodes whatever it decoded; silent if nothing
    k1, k2 = cfg.k1, cfg.k2
    if relay_decoded[1] or relay_decoded[2]:
        arriving = int(survivors(cfg.n_r, cfg.prd, rng).sum())
        relay_left = _relay_half(relay_decoded[1], arriving, k1, rng)
        relay_right = _relay_half(relay_decoded[2], arriving, k2, rng)
    else:
        arriving = 0
        relay_left = BitMatrix.zeros(0, k1)
        relay_right = BitMatrix.zeros(0, k2)

    c1, c2 = at_destination[1], at_destination[2]
    combined = stack_block_angular(c1, c2, relay_left, relay_right)
    combined_rank = rank(combined)

    # Source l is recoverable iff the row space holds all its unit vectors:
    # rank(C_D) minus the rank of the other source's columns equals K_l
    rank_left = rank(c1.vstack(relay_left))
    rank_right = rank(c2.vstack(relay_right))

    return TrialOutcome(
        m1=received[1][0],
        m2=received[2][0],
        m1_relay=received[1][1],
        m2_relay=received[2][1],
        m_relay=arriving,
        shared_1=received[1][2],
        shared_2=received[2][2],
        relay_decoded_1=relay_decoded[1],
        relay_decoded_2=relay_decoded[2],
        direct_decoded_1=rank(c1) == k1,
        direct_decoded_2=rank(c2) == k2,
        dest_decoded_1=combined_rank - rank_right == k1,
        dest_decoded_2=combined_rank - rank_left == k2,
        dest_decoded_both=combined_rank == k1 + k2,
    )


def run_ptp_trial(n: int, k: int, p: float, scheme: Scheme, rng: np.random.Generator) -> bool:
    """One point-to-point transmission; True when the receiver decodes"""
    sent = source_generation(n, k, scheme, rng)
    return rank(sent.take_rows(survivors(n, p, rng))) == k
