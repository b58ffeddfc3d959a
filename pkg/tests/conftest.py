#!/usr/bin/env python3
"""Shared fixtures for tests"""
import numpy as np
import pytest

from src.core.config import Settings
from src.core.models import NetworkConfig, Scheme


@pytest.fixture
def rng():
    """Seeded generator for reproducible random matrices"""
    return np.random.default_rng(20240611)


@pytest.fixture
def reference_config():
    """Symmetric K=20, N=30 network with the caption erasure rates"""
    return NetworkConfig.symmetric(k=20, n=30, n_r=10, p_sd=0.3, p_sr=0.1, p_rd=0.2)


@pytest.fixture
def small_config():
    """Small asymmetric network that simulates quickly"""
    return NetworkConfig(
        k1=3, k2=4, n1=5, n2=6, n_r=4,
        p1d=0.3, p2d=0.4, p1r=0.2, p2r=0.1, prd=0.25,
    )


@pytest.fixture
def small_sys_config(small_config):
    """small_config with systematic sources"""
    return small_config.model_copy(update={"scheme": Scheme.SYSTEMATIC})


@pytest.fixture
def test_settings():
    """Test settings"""
    return Settings(profile="quick", workers=1, chunk_size=256)
