"""Shared helpers for the test suite."""

import sys

import numpy as np
import pytest

from appbasis.polymat import PolyMat

P = 998244353  # default NTT-friendly modulus
P7 = 7


def pm(p, entries):
    """PolyMat from nested coefficient lists (rows of entries, low first)."""
    return PolyMat.from_entries(p, entries)


def rand_instance(seed, m, n, orders, p=P):
    rng = np.random.default_rng(seed)
    return PolyMat.random(p, m, n, orders, rng)


def rand_orders(rng, n, sigma_max):
    """Random positive orders with sum <= sigma_max."""
    budget = max(int(sigma_max), n)
    d = [1] * n
    for _ in range(n * 4):
        j = int(rng.integers(0, n))
        if sum(d) < budget:
            d[j] += int(rng.integers(0, max(1, (budget - sum(d)) // 2 + 1)))
    excess = sum(d) - budget
    j = 0
    while excess > 0:
        take = min(excess, d[j] - 1)
        d[j] -= take
        excess -= take
        j += 1
    return tuple(d)


@pytest.fixture
def rng():
    return np.random.default_rng(0)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Repeat the one-line acceptance reports after the captured test output."""
    mod = sys.modules.get("test_acceptance")
    if mod is not None and getattr(mod, "REPORTS", None):
        terminalreporter.section("acceptance criteria")
        for line in mod.REPORTS:
            terminalreporter.write_line(line)
