#!/usr/bin/env python3
"""Exhaustive enumeration oracles over small binary matrices"""
import itertools
from collections import Counter
from fractions import Fraction

from src.core.constants import Limits
from src.core.errors import EnumerationLimitError
from src.core.logger import get_logger
from src.gf2.bitmatrix import rank_of_row_masks
from src.gf2.shapes import BlockAngularShape, MatrixShape

logger = get_logger("enumeration")


def _check_limit(bits: int, what: str) -> None:
    if bits > Limits.MAX_ENUMERATION_BITS:
        logger.warning(f"Refusing to enumerate {what}: 2^{bits} matrices")
        raise EnumerationLimitError(
            f"{what} has {bits} free bits; enumeration is limited to "
            f"{Limits.MAX_ENUMERATION_BITS} bits (2^{Limits.MAX_ENUMERATION_BITS} matrices)"
        )


def enumerate_rank_distribution(shape: MatrixShape) -> dict[int, Fraction]:
    """Exact rank distribution of a uniform m x k binary matrix

    Visits every one of the 2^(mk) matrices.

    Returns:
        Rank -> exact probability; masses sum to exactly 1
    """
    _check_limit(shape.bits, f"shape {shape.m}x{shape.k}")

    tally: Counter[int] = Counter()
    for rows in itertools.product(range(1 << shape.k), repeat=shape.m):
        tally[rank_of_row_masks(rows)] += 1

    total = 1 << shape.bits
    return {r: Fraction(count, total) for r, count in sorted(tally.items())}


def block_angular_full_rank_by_enumeration(shape: BlockAngularShape) -> Fraction:
    """Exact probability that a uniform block angular matrix has full column rank"""
    _check_limit(shape.free_bits, f"block angular shape {shape}")

    if shape.rows < shape.cols:
        return Fraction(0)

    # Rows as masks over a' + b' columns; B rows use the bits after A's
    a_rows = [mask for mask in range(1 << shape.a_prime)]
    b_rows = [mask << shape.a_prime for mask in range(1 << shape.b_prime)]
    c_rows = list(range(1 << shape.cols))

    full = 0
    for a_part in itertools.product(a_rows, repeat=shape.a):
        for b_part in itertools.product(b_rows, repeat=shape.b):
            for c_part in itertools.product(c_rows, repeat=shape.c):
                if rank_of_row_masks(a_part + b_part + c_part) == shape.cols:
                    full += 1

    return Fraction(full, 1 << shape.free_bits)
