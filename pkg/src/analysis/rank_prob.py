#!/usr/bin/env python3
"""Rank probabilities of random binary matrices and point-to-point decoding

All functions are pure and memoised. Internal summations treat impossible
rank queries as probability zero; the systematic formulas validate their
preconditions because they are public entry points.
"""
import math
from functools import lru_cache

from scipy.special import gammaln

from src.core.constants import Limits
from src.core.errors import InternalConsistencyError, InvalidArgumentError
from src.core.logger import get_logger
from src.core.models import Scheme
from src.gf2.shapes import BlockAngularShape

logger = get_logger("rank_prob")

__all__ = [
    "BlockAngularShape",
    "binomial_pmf",
    "block_angular_full_rank_prob",
    "checked_probability",
    "decode_prob",
    "full_rank_prob",
    "log_binomial",
    "ptp_decode_prob",
    "rank_prob",
    "sys_full_rank_prob",
    "sys_ptp_decode_prob",
    "sys_rank_prob",
    "systematic_weight",
]


def checked_probability(value: float, what: str = "probability") -> float:
    """Clamp round-off into [0, 1]; anything further out is a formula bug"""
    tol = Limits.PROBABILITY_TOLERANCE
    if not -tol <= value <= 1.0 + tol:
        raise InternalConsistencyError(f"{what} = {value!r} is outside [0, 1]")
    if value < 0.0 or value > 1.0:
        logger.debug(f"Clamping {what} = {value!r}")
    return min(max(value, 0.0), 1.0)


def _pow2(exponent: int) -> float:
    return math.ldexp(1.0, exponent)


@lru_cache(maxsize=None)
def full_rank_prob(m: int, k: int) -> float:
    """Probability that a uniform m x k binary matrix has rank k"""
    if k <= 0:
        return 1.0
    if m < k:
        return 0.0
    return checked_probability(math.prod(1.0 - _pow2(i - m) for i in range(k)))


@lru_cache(maxsize=None)
def rank_prob(m: int, k: int, r: int) -> float:
    """Probability that a uniform m x k binary matrix has rank exactly r

    Evaluated as 2^-(m-r)(k-r) * prod_{i<r} (1-2^(i-m))(1-2^(i-k)) / (1-2^(i-r)),
    which never forms the huge counts of the combinatorial definition.
    """
    if r < 0 or r > min(m, k):
        return 0.0

    value = _pow2(-(m - r) * (k - r))
    for i in range(r):
        value *= (1.0 - _pow2(i - m)) * (1.0 - _pow2(i - k)) / (1.0 - _pow2(i - r))
    return checked_probability(value)


def block_angular_full_rank_prob(shape: BlockAngularShape) -> float:
    """Probability that a uniform block angular matrix has full column rank

    Sums over the ranks i of A and j of B; the bottom band must supply the
    remaining a' + b' - i - j independent columns.
    """
    cols = shape.cols
    terms = []
    for i in range(min(shape.a, shape.a_prime) + 1):
        p_a = rank_prob(shape.a, shape.a_prime, i)
        for j in range(min(shape.b, shape.b_prime) + 1):
            if i + j < cols - shape.c:
                continue
            terms.append(p_a * rank_prob(shape.b, shape.b_prime, j) * full_rank_prob(shape.c, cols - i - j))
    return checked_probability(math.fsum(terms), "block angular full-rank probability")


def log_binomial(n: int, k: int) -> float:
    """log C(n, k) via log-gamma; -inf outside 0 <= k <= n"""
    if k < 0 or k > n:
        return -math.inf
    return float(gammaln(n + 1) - gammaln(k + 1) - gammaln(n - k + 1))


@lru_cache(maxsize=None)
def binomial_pmf(received: int, sent: int, p: float) -> float:
    """Probability that exactly `received` of `sent` packets survive erasure probability p"""
    if received < 0 or received > sent:
        return 0.0
    lost = sent - received
    # Exact corners avoid log(0)
    if p <= 0.0:
        return 1.0 if lost == 0 else 0.0
    if p >= 1.0:
        return 1.0 if received == 0 else 0.0

    log_value = log_binomial(sent, received) + received * math.log1p(-p) + lost * math.log(p)
    return checked_probability(math.exp(log_value), "binomial pmf")


@lru_cache(maxsize=None)
def ptp_decode_prob(n: int, k: int, p: float) -> float:
    """Probability of recovering k source packets from n random coded packets over erasure p"""
    if n < k:
        return 0.0
    terms = [binomial_pmf(m, n, p) * full_rank_prob(m, k) for m in range(k, n + 1)]
    return checked_probability(math.fsum(t for t in terms if t >= Limits.NEGLIGIBLE_TERM))


def systematic_weight(h: int, m: int, k: int, n: int) -> float:
    """Probability that h of m received packets are systematic, when k of n sent are"""
    log_value = log_binomial(k, h) + log_binomial(n - k, m - h) - log_binomial(n, m)
    if log_value == -math.inf:
        return 0.0
    return math.exp(log_value)


def _check_systematic(m: int, k: int, n: int) -> None:
    if min(m, k, n) < 0:
        raise InvalidArgumentError(f"packet counts must be non-negative (M={m}, K={k}, N={n})")
    if m > n:
        raise InvalidArgumentError(f"cannot receive M={m} of N={n} packets")
    if k > n:
        raise InvalidArgumentError(f"systematic coding needs N >= K (K={k}, N={n})")


@lru_cache(maxsize=None)
def sys_full_rank_prob(m: int, k: int, n: int) -> float:
    """Probability of decoding k systematic-coded packets given m of n were received"""
    _check_systematic(m, k, n)
    if m < k:
        raise InvalidArgumentError(f"decoding needs M >= K (M={m}, K={k})")

    h_min = max(0, m - n + k)
    terms = [
        systematic_weight(h, m, k, n) * full_rank_prob(m - h, k - h)
        for h in range(h_min, min(k, m) + 1)
    ]
    return checked_probability(math.fsum(terms), "systematic full-rank probability")


@lru_cache(maxsize=None)
def sys_rank_prob(m: int, k: int, r: int, n: int) -> float:
    """Probability that m received systematic-coded packets span exactly r dimensions"""
    _check_systematic(m, k, n)
    if r < 0 or r > m or r > k:
        raise InvalidArgumentError(f"rank r={r} needs 0 <= r <= min(M, K) (M={m}, K={k})")

    h_min = max(0, m - n + k)
    terms = [
        systematic_weight(h, m, k, n) * rank_prob(m - h, k - h, r - h)
        for h in range(h_min, min(r, m) + 1)
    ]
    return checked_probability(math.fsum(terms), "systematic rank probability")


@lru_cache(maxsize=None)
def sys_ptp_decode_prob(n: int, k: int, p: float) -> float:
    """Point-to-point decoding probability when the first k of n packets are systematic"""
    if n < k:
        return 0.0
    terms = [binomial_pmf(m, n, p) * sys_full_rank_prob(m, k, n) for m in range(k, n + 1)]
    return checked_probability(math.fsum(t for t in terms if t >= Limits.NEGLIGIBLE_TERM))


def decode_prob(n: int, k: int, p: float, scheme: Scheme) -> float:
    """Point-to-point decoding probability for either scheme"""
    if scheme == Scheme.SYSTEMATIC:
        return sys_ptp_decode_prob(n, k, p)
    return ptp_decode_prob(n, k, p)
