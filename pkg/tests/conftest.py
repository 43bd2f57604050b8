"""
pytest configuration and shared fixtures for the counting engine tests.
"""
import pytest

from qcount.services import TypeSuite


@pytest.fixture
def tight_budget(settings):
    """Oracle budget small enough that F_2^3 does not fit."""
    settings.QCOUNT_ENUMERATION_BUDGET = 10
    return settings.QCOUNT_ENUMERATION_BUDGET


@pytest.fixture
def small_degree_cap(settings):
    settings.QCOUNT_DEGREE_CAP = 3
    return settings.QCOUNT_DEGREE_CAP


@pytest.fixture
def type_suite():
    """Labelled types of sizes 1..3 with their oracle shift."""
    return TypeSuite.up_to(3)
