import pytest

from liemult import verify


@pytest.fixture(scope="session")
def full_report():
    """One full verification run shared by the verify and acceptance tests."""
    return verify.run_all(9)
