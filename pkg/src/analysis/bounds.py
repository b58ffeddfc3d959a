#!/usr/bin/env python3
"""Decoding-probability upper bounds for the two-source single-relay network

The destination's success splits into three exclusive routes: both sources
decoded from the direct links alone, one source completed with relay help,
or both sources completed with relay help. Capping the direct-link rank at
K - 1 in the aided routes keeps them disjoint from the unaided one. The
aided routes treat relay and destination receptions as independent, which
is what makes them upper bounds.
"""
import math

from src.analysis.rank_prob import (
    binomial_pmf,
    checked_probability,
    decode_prob,
    ptp_decode_prob,
    rank_prob,
    sys_rank_prob,
)
from src.core.constants import Limits
from src.core.logger import get_logger
from src.core.models import BoundBreakdown, NetworkConfig, Scheme, Source

logger = get_logger("bounds")


def _rank_term(m: int, k: int, i: int, n: int, scheme: Scheme) -> float:
    """Probability the destination holds rank i after receiving m of n packets"""
    if scheme == Scheme.SYSTEMATIC:
        return sys_rank_prob(m, k, i, n)
    return rank_prob(m, k, i)


def _deficient_rank_weights(cfg: NetworkConfig, source: Source) -> list[float]:
    """u_i = sum over M of B(M, N, p_D) * P(rank i), for i = 0 .. K - 1"""
    k, n, p = cfg.k_of(source), cfg.n_of(source), cfg.p_direct(source)
    weights = []
    for i in range(k):
        terms = []
        for m in range(i, n + 1):
            term = binomial_pmf(m, n, p) * _rank_term(m, k, i, n, cfg.scheme)
            if term >= Limits.NEGLIGIBLE_TERM:
                terms.append(term)
        weights.append(math.fsum(terms))
    return weights


def _relay_completion(cfg: NetworkConfig, missing: int) -> float:
    """Relay packets reaching D supply `missing` independent vectors

    The relay re-encodes non-systematically regardless of the source scheme.
    """
    return ptp_decode_prob(cfg.n_r, missing, cfg.prd)


def _relay_decodes(cfg: NetworkConfig, source: Source) -> float:
    return decode_prob(cfg.n_of(source), cfg.k_of(source), cfg.p_relay(source), cfg.scheme)


def _direct_decodes(cfg: NetworkConfig, source: Source) -> float:
    return decode_prob(cfg.n_of(source), cfg.k_of(source), cfg.p_direct(source), cfg.scheme)


def unaided_prob(cfg: NetworkConfig) -> float:
    """Both sources decoded from the direct links alone (exact)"""
    return checked_probability(_direct_decodes(cfg, 1) * _direct_decodes(cfg, 2), "unaided probability")


def partial_aid_prob(cfg: NetworkConfig, aided: Source) -> float:
    """Upper bound on: other source direct, `aided` source completed by the relay"""
    other: Source = 2 if aided == 1 else 1
    k = cfg.k_of(aided)

    prefactor = _direct_decodes(cfg, other) * _relay_decodes(cfg, aided)
    if prefactor == 0.0:
        return 0.0

    weights = _deficient_rank_weights(cfg, aided)
    completion = math.fsum(
        u * _relay_completion(cfg, k - i)
        for i, u in enumerate(weights)
        if u >= Limits.NEGLIGIBLE_TERM
    )
    return checked_probability(prefactor * completion, f"partial-aid probability (source {aided})")


def fully_aided_prob(cfg: NetworkConfig) -> float:
    """Upper bound on: both sources completed by relay packets

    The sums over M1, M2 factor out of the rank sums, so the bound is
    sum_i sum_j u_i v_j P(N_R, K1 + K2 - i - j, p_RD).
    """
    prefactor = _relay_decodes(cfg, 1) * _relay_decodes(cfg, 2)
    if prefactor == 0.0:
        return 0.0

    total_k = cfg.total_source_packets
    weights_1 = _deficient_rank_weights(cfg, 1)
    weights_2 = _deficient_rank_weights(cfg, 2)

    terms = []
    for i, u in enumerate(weights_1):
        if u < Limits.NEGLIGIBLE_TERM:
            continue
        for j, v in enumerate(weights_2):
            term = u * v * _relay_completion(cfg, total_k - i - j)
            if term >= Limits.NEGLIGIBLE_TERM:
                terms.append(term)

    return checked_probability(prefactor * math.fsum(terms), "fully-aided probability")


def decode_prob_bound(cfg: NetworkConfig) -> BoundBreakdown:
    """Upper bound on the probability that D recovers all K1 + K2 source packets"""
    breakdown = BoundBreakdown.compose(
        scheme=cfg.scheme,
        p_unaided=unaided_prob(cfg),
        p_partial_1=partial_aid_prob(cfg, 1),
        p_partial_2=partial_aid_prob(cfg, 2),
        p_fully_aided=fully_aided_prob(cfg),
    )
    if breakdown.p_total > 1.0:
        logger.warning(f"Bound exceeds 1 ({breakdown.p_total!r}) for {cfg}")
    return breakdown
