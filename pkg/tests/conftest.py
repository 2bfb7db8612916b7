"""Shared fixtures and hypothesis profiles"""
import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from config import Config
from monoids.enumeration import enumerate_elements

settings.register_profile(
    "default",
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("acceptance", max_examples=Config.RANDOM_TRIALS, deadline=None)
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(Config.RANDOM_SEED)


@pytest.fixture(scope="session")
def signed_elements():
    """I(B_n) for n = 0..3, keyed by rank"""
    return {n: list(enumerate_elements(n, signed=True)) for n in range(4)}


@pytest.fixture(scope="session")
def unsigned_elements():
    """I_n for n = 0..4, keyed by rank"""
    return {n: list(enumerate_elements(n, signed=False)) for n in range(5)}
