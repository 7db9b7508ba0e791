"""Fixtures used for Test cases."""
# pylint: disable=wrong-import-order
import pytest
from click.testing import CliRunner
from supercount import SuperCountApp, create_app


def pytest_configure(config):
    """Registers the markers used by the test suite."""
    config.addinivalue_line("markers", "slow: long sweeps up to p = 10^4")


@pytest.fixture(name="app", scope="session")
def fixture_app() -> SuperCountApp:
    """Fixture for the supercount app in testing mode.

    Returns:
        :obj:`~supercount.SuperCountApp`: The app, with a synchronous queue.
    """
    return create_app("testing")


@pytest.fixture(name="runner", scope="function")
def fixture_runner() -> CliRunner:
    """Fixture for a runner that invokes the supercount command line.

    Returns:
        :obj:`~click.testing.CliRunner`: Runner keeping stdout and stderr apart.
    """
    return CliRunner(mix_stderr=False)
