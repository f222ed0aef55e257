import os

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from gkm import catalog

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=400)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")

A, B = (1, 0), (0, 1)


def catalog_graphs():
    return {
        "P1": catalog("P1", A, B, c=(1, 1)),
        "P2": catalog("P2", A, B),
        "P3": catalog("P3", A, B),
        "Q1": catalog("Q1", A, B),
        "Q2": catalog("Q2", A, B),
        "S0": catalog("S", A, B, k=0),
        "S1": catalog("S", A, B, k=1),
        "S2": catalog("S", A, B, k=2),
        "S6": catalog("S6", A, B),
    }


@pytest.fixture(scope="session")
def graphs():
    return catalog_graphs()


@st.composite
def unimodular(draw, n=2, steps=6):
    """Random element of GL(n, Z) as a product of elementary matrices and sign flips."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(draw(st.integers(0, steps))):
        i, j = draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))
        if i == j:
            m[i] = [-x for x in m[i]]
        else:
            k = draw(st.integers(-2, 2))
            m[i] = [x + k * y for x, y in zip(m[i], m[j])]
    return m


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        ok, detail = mod.RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
