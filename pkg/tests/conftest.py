"""Shared fixtures for the pellpoly test suite."""

import pytest

from core.polynomial import IntPolynomial
from core.types import ScanSpec


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", default=False, help="run full-size reproduction scans")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


# Radicands with known expansions: (f, a0, period)
KNOWN_EXPANSIONS = [
    (2, 1, (2,)),
    (3, 1, (1, 2)),
    (5, 2, (4,)),
    (7, 2, (1, 1, 1, 4)),
    (8, 2, (1, 4)),
    (12, 3, (2, 6)),
    (13, 3, (1, 1, 1, 1, 6)),
    (19, 4, (2, 1, 3, 1, 2, 8)),
    (22, 4, (1, 2, 4, 2, 1, 8)),
    (31, 5, (1, 1, 3, 5, 3, 1, 1, 10)),
    (43, 6, (1, 1, 3, 1, 5, 1, 3, 1, 1, 12)),
    (57, 7, (1, 1, 4, 1, 1, 14)),
]

# Fundamental solutions of X^2 - f*Y^2 = 1
KNOWN_SOLUTIONS = [
    (2, 3, 2),
    (3, 2, 1),
    (5, 9, 4),
    (7, 8, 3),
    (13, 649, 180),
    (19, 170, 39),
    (22, 197, 42),
    (43, 3482, 531),
    (57, 151, 20),
    (61, 1766319049, 226153980),
]


@pytest.fixture
def small_scan_spec():
    """t^2 + 2t + 3 over [0, 20], sieving by 2^2 and 3^2 only."""
    return ScanSpec(poly=IntPolynomial.of(3, 2, 1), t_lo=0, t_hi=20, sieve_bound=3)
