import sys

import numpy as np
import pytest

from zeroprod.algebra import mat_algebra, upper_triangular


@pytest.fixture(scope="session")
def m22():
    return mat_algebra(2, 2)


@pytest.fixture(scope="session")
def m23():
    return mat_algebra(2, 3)


@pytest.fixture(scope="session")
def m25():
    return mat_algebra(2, 5)


@pytest.fixture(scope="session")
def m32():
    return mat_algebra(3, 2)


@pytest.fixture(scope="session")
def ut22():
    return upper_triangular(2, 2)


def unit(n, i, j):
    """Coordinates of the matrix unit E_ij (1-based) in mat_algebra(n, p)."""
    v = np.zeros(n * n, dtype=np.int64)
    v[(i - 1) * n + (j - 1)] = 1
    return v


def mat_coords(m):
    return np.asarray(m, dtype=np.int64).reshape(-1)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
