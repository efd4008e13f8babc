from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from matchpairs.graph import Graph  # noqa: E402

DATA = Path(__file__).resolve().parents[1] / "src" / "matchpairs" / "data"

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True
)
settings.load_profile("default")

# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9, max_m: int = 16) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return Graph(n, [])
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=min(max_m, len(pairs))))
    return Graph(n, edges)


@st.composite
def graph_with_two_matchings(draw, max_n: int = 14, max_m: int = 24):
    """A graph plus two (possibly overlapping) matchings grown greedily in drawn order."""
    g = draw(graphs(min_n=1, max_n=max_n, max_m=max_m))
    ms = []
    for _ in range(2):
        order = draw(st.permutations(list(g.edges)))
        keep = draw(st.lists(st.booleans(), min_size=len(order), max_size=len(order)))
        used: set[int] = set()
        m = []
        for e, k in zip(order, keep):
            if k and e[0] not in used and e[1] not in used:
                m.append(e)
                used |= set(e)
        ms.append(frozenset(m))
    return g, ms[0], ms[1]


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
