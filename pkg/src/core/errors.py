#!/usr/bin/env python3
"""Exception hierarchy for marc-rlnc"""


class MarcError(Exception):
    """Base class for all library errors"""


class InvalidArgumentError(MarcError, ValueError):
    """A public operation was called outside its preconditions"""


class EnumerationLimitError(InvalidArgumentError):
    """Exhaustive enumeration refused because the search space is too large"""


class InternalConsistencyError(MarcError, ArithmeticError):
    """A computed probability left [0, 1] by more than the round-off tolerance"""


class OutputError(MarcError, OSError):
    """Result file could not be written"""
