import pytest

from libkovalevskaya import PencilSpec


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: end-to-end reconstructions that take minutes")


@pytest.fixture
def spec():
    return PencilSpec(kappa=-1.0, c1=1.0)
