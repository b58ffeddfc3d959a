#!/usr/bin/env python3
"""Constants and limits for marc-rlnc"""


class Limits:
    """Numerical and size limits shared across modules"""

    # GF(2) storage
    WORD_BITS = 64

    # Exhaustive enumeration: at most 2^20 matrices
    MAX_ENUMERATION_BITS = 20

    # Probabilities may leave [0, 1] by this much before it is an error
    PROBABILITY_TOLERANCE = 1e-12

    # Summation terms below this are dropped
    NEGLIGIBLE_TERM = 1e-300

    # Seeds are 64-bit unsigned
    MAX_SEED = 2**64 - 1

    # Validation
    MAX_PATH_LENGTH = 4096
    MAX_VALUES_TEXT = 10_000


class Output:
    """Presentation constants"""

    SIGNIFICANT_DIGITS = 9

    CSV_HEADER = (
        "axis",
        "bound_raw",
        "bound_clamped",
        "bound_unaided",
        "bound_partial1",
        "bound_partial2",
        "bound_fully",
        "sim_estimate",
        "sim_ci_low",
        "sim_ci_high",
        "trials",
        "seed",
    )


class ExitCode:
    """Process exit codes of the CLI"""

    OK = 0
    INTERNAL_ERROR = 1
    INVALID_ARGUMENTS = 2
    IO_FAILURE = 3
