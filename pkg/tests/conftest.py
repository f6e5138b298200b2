from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from anngraph.analysis import RingAnalysis
from anngraph.corpus import generate_corpus
from anngraph.ring import make_product, make_zn
from anngraph.theorems import golden_ring

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def an_ring():
    return golden_ring()


@pytest.fixture(scope="session")
def an_ctx(an_ring):
    return RingAnalysis(an_ring)


@pytest.fixture(scope="session")
def corpus64():
    return generate_corpus(64)


def zn(m):
    return make_zn(m)


def prod(*ms):
    return make_product([make_zn(m) for m in ms])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import summary_lines
    except ImportError:
        return
    lines = summary_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
