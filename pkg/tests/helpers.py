#!/usr/bin/env python3
"""Statistical assertions shared by the simulation tests"""


def within_standard_errors(estimate: float, expected: float, trials: int, sigmas: float = 4.0) -> bool:
    """True when estimate lies within `sigmas` binomial standard errors of expected"""
    variance = max(expected * (1.0 - expected), 1.0 / trials) / trials
    return abs(estimate - expected) <= sigmas * variance ** 0.5
