import pytest

from arith.sieve import build_sieve


@pytest.fixture(scope="session")
def sieve():
    """One sieve shared by every test that needs φ or μ."""
    return build_sieve(200_000)
