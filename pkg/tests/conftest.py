import math

import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=200)
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


def random_interior(rng, n, rmax=2.5):
    """Interior model points from random hyperboloid coordinates, randomly scaled."""
    r = rng.uniform(0.0, rmax, n)
    th = rng.uniform(-math.pi, math.pi, n)
    ph = rng.uniform(-math.pi, math.pi, n)
    pts = np.stack([np.cosh(r) * np.cos(ph), np.cosh(r) * np.sin(ph),
                    np.sinh(r) * np.cos(th - ph), np.sinh(r) * np.sin(th - ph)], axis=1)
    return pts * rng.uniform(0.1, 10.0, (n, 1))


ACCEPTANCE = {}


@pytest.fixture
def acceptance():
    """Record ``(criterion, passed, detail)``; lines are printed in the terminal summary."""
    def record(number, title, passed, detail):
        ACCEPTANCE[number] = f"{'PASS' if passed else 'FAIL'}  [{number:2d}] {title}: {detail}"
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])
