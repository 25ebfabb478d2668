from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from srclab.graph import Graph, from_edge_list

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 7, max_extra: int | None = None) -> Graph:
    """A random spanning tree plus a random set of extra edges."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    others = [(u, v) for v in range(n) for u in range(v) if (u, v) not in pairs]
    if others:
        extra = draw(st.lists(st.sampled_from(others), unique=True, max_size=max_extra if max_extra is not None else len(others)))
    else:
        extra = []
    order = draw(st.permutations(pairs + extra))
    return from_edge_list(n, order)


@st.composite
def colored_graphs(draw, max_n: int = 6, max_colors: int = 4):
    g = draw(connected_graphs(max_n=max_n))
    colors = draw(st.lists(st.integers(0, max_colors - 1), min_size=g.m, max_size=g.m))
    return g, colors


# one PASS/FAIL line per acceptance criterion, shown in the terminal summary
_ACCEPTANCE: list[str] = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
