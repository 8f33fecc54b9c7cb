import os
import sys
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from perfham.graph import Graph

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=500,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_addoption(parser):
    parser.addoption("--skip-slow", action="store_true", help="skip tests marked slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--skip-slow"):
        skip = pytest.mark.skip(reason="--skip-slow given")
        for item in items:
            if "slow" in item.keywords:
                item.add_marker(skip)


@st.composite
def small_graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def regular_graphs(draw, degrees=(3,), max_n=10, connected=True):
    d = draw(st.sampled_from(degrees))
    sizes = [n for n in range(d + 1, max_n + 1) if (n * d) % 2 == 0]
    n = draw(st.sampled_from(sizes))
    seed = draw(st.integers(0, 10**6))
    for attempt in range(50):
        g = nx.random_regular_graph(d, n, seed=seed + attempt)
        if not connected or nx.is_connected(g):
            return Graph(n, g.edges())
    return Graph(d + 1, [(u, v) for u in range(d + 1) for v in range(u + 1, d + 1)])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph(len(idx), [(idx[u], idx[v]) for u, v in h.edges()])


def pytest_terminal_summary(terminalreporter):
    """One line per acceptance criterion; a criterion passes only if all its parts do."""
    verdicts: dict[int, str] = {}
    rank = {"passed": 0, "skipped": 1, "failed": 2}
    for outcome in ("passed", "failed", "skipped"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call" and not (outcome != "passed" and rep.when == "setup"):
                continue
            name = rep.nodeid.split("::")[-1]
            if "test_acceptance.py" not in rep.nodeid or not name.startswith("test_criterion_"):
                continue
            num = int(name.split("_")[2])
            old = verdicts.get(num, "passed")
            verdicts[num] = max(old, outcome, key=rank.get)
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(verdicts):
        terminalreporter.write_line(f"criterion {num:2d}: {verdicts[num].upper()}")
