import time

import pytest

from shortgrav import PAPER, ParticlePair


def pytest_configure(config):
    config._suite_start = time.perf_counter()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    elapsed = time.perf_counter() - config._suite_start
    terminalreporter.write_line(
        f"total suite wall time: {elapsed:.1f} s (acceptance budget: 120 s)"
    )


@pytest.fixture(scope="session")
def paper():
    return PAPER


@pytest.fixture(scope="session")
def nucleons(paper):
    return ParticlePair.nucleons(paper)
