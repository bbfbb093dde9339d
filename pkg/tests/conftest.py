import pytest

from crosscache import builtin, configure


@pytest.fixture(scope="session")
def example7_config():
    return configure(builtin("example7"), 2, 2)


@pytest.fixture(scope="session")
def example8_config():
    return configure(builtin("example8"), 2, 2)
