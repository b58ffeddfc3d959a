#!/usr/bin/env python3
"""Simple logging configuration for marc-rlnc"""
import logging
import os
import sys

DEFAULT_LEVEL = "WARNING"


def get_logger(name: str) -> logging.Logger:
    """Get configured logger for module"""
    logger = logging.getLogger(f"marc.{name}")

    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        )
        handler.setFormatter(formatter)
        logger.addHandler(handler)
        logger.setLevel(os.environ.get("MARC_LOG_LEVEL", DEFAULT_LEVEL).upper())
        logger.propagate = False

    return logger


def set_level(level: str) -> None:
    """Change the level of every marc logger created so far"""
    for name in list(logging.root.manager.loggerDict):
        if name.startswith("marc."):
            logging.getLogger(name).setLevel(level.upper())
