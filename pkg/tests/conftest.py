import pytest

from matvol.catalog import full_catalog


@pytest.fixture(scope="session")
def catalog5():
    return full_catalog(5)


@pytest.fixture(scope="session")
def catalog6():
    return full_catalog(6)
