import pytest

from lerchstokes import PrecisionContext


@pytest.fixture(scope="session")
def ctx30():
    return PrecisionContext(digits=30)


@pytest.fixture(scope="session")
def ctx50():
    return PrecisionContext(digits=50)
